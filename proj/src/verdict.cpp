#include "stellar/verdict.hpp"

namespace stellar {

std::string_view to_string(Answer a)
{
    switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
    }
    return "Unknown";
}

} // namespace stellar
