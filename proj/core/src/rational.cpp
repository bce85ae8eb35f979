#include "logsym/rational.hpp"

#include <cctype>

#include "logsym/errors.hpp"

namespace logsym {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("", "not a rational number: \"" + std::string(text) + "\"");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("", "zero denominator in \"" + std::string(text) + "\"");
    if (!text.empty() && text.front() == '-') n = -n;

    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_natural(const Rational& q) { return is_integer(q) && sgn(q) >= 0; }

}  // namespace logsym
