#include "prepro/rational.hpp"

#include <cctype>

#include "prepro/errors.hpp"

namespace prepro {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    // Validate shape before handing to GMP: optional sign, digits, optional /digits.
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("bad rational literal: " + s);
    if (num_end != s.size()) {
        if (s[num_end] != '/') throw ParseError("bad rational literal: " + s);
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != s.size())
            throw ParseError("bad rational literal: " + s);
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace prepro
