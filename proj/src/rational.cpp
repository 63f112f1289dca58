#include "fanolab/rational.hpp"

#include "fanolab/error.hpp"

namespace fanolab {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw Error(ErrorCode::INVALID_ARGUMENT, "empty rational string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q{Int(s)};
            return q;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::INVALID_ARGUMENT, "zero denominator in '" + s + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::INVALID_ARGUMENT, "bad rational string '" + s + "'");
    }
}

std::string rational_to_string(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::int64_t to_i64(const Int& z) {
    if (!z.fits_slong_p())
        throw Error(ErrorCode::INVALID_ARGUMENT, "integer out of 64-bit range: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace fanolab
