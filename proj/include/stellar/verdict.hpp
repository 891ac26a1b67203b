#pragma once

#include <string>
#include <string_view>

namespace stellar {

enum class Answer { Yes, No, Unknown };

std::string_view to_string(Answer a);

struct Verdict {
    Answer answer = Answer::Unknown;
    std::string witness;

    bool yes() const { return answer == Answer::Yes; }

    static Verdict accept(std::string text = {}) { return {Answer::Yes, std::move(text)}; }
    static Verdict reject(std::string text) { return {Answer::No, std::move(text)}; }
    static Verdict unknown(std::string text) { return {Answer::Unknown, std::move(text)}; }
};

} // namespace stellar
