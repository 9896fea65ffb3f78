#include "polyfc/json_io.hpp"

namespace polyfc {

Int parse_int(const std::string& s) {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        start = 1;
    if (start == s.size())
        throw PreconditionViolated("not a decimal integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw PreconditionViolated("not a decimal integer: '" + s + "'");
    return Int(s);
}

Int parse_nat(const std::string& s) {
    Int n = parse_int(s);
    if (n < 0)
        throw PreconditionViolated("negative value where a non-negative "
                                   "integer is required: '" + s + "'");
    return n;
}

} // namespace polyfc
