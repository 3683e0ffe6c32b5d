#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hallforest {

// Exact rational scalar used throughout; no floating point anywhere.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

// Parses "n" or "n/d" with optional sign; rejects zero denominators.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpz_class(s), 1);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational '" + s + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

}  // namespace hallforest
