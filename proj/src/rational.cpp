#include "cyclic/error.hpp"
#include "cyclic/rational.hpp"

namespace cyclic {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::NoStableIndexing: return "NoStableIndexing";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::InvalidSplitting: return "InvalidSplitting";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IrrationalRoots: return "IrrationalRoots";
    case ErrorKind::ChartDegenerate: return "ChartDegenerate";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::ZeroInteriorMap: return "ZeroInteriorMap";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::ZeroGamma: return "ZeroGamma";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    }
    return "Unknown";
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer multinomial(std::span<const int> parts) {
    Integer result = 1;
    long total = 0;
    for (int part : parts) {
        if (part < 0) {
            return 0;
        }
        total += part;
        result *= binomial(total, part);
    }
    return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace cyclic
