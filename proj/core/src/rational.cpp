#include "qforge/rational.hpp"

#include "qforge/errors.hpp"

#include <cctype>

namespace qforge {

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

namespace {

bool valid_integer_token(const std::string& s, size_t begin, size_t end) {
    if (begin >= end) return false;
    size_t i = begin;
    if (s[i] == '-') ++i;
    if (i >= end) return false;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational rat_from_string(const std::string& s) {
    const size_t slash = s.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = valid_integer_token(s, 0, s.size());
    } else {
        ok = valid_integer_token(s, 0, slash) &&
             valid_integer_token(s, slash + 1, s.size());
    }
    if (!ok) throw InputError("not a rational number: \"" + s + "\"");

    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("not a rational number: \"" + s + "\"");
    if (r.get_den() == 0)
        throw InputError("zero denominator in rational: \"" + s + "\"");
    r.canonicalize();
    return r;
}

} // namespace qforge
