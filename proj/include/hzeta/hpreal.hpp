#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace hz {

// Variable-precision MPFR real; mixed-precision arithmetic yields the larger precision.
using HPReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;

struct PrecisionConfig {
    int bits = 256;
    int guard_bits = 32;

    int working_bits() const { return bits + guard_bits; }
    int digits10() const;
    // default config, honouring HZETA_PREC when set
    static PrecisionConfig from_env();
};

// Sets the default precision of newly created HPReals for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionConfig& cfg);
    explicit PrecisionScope(int working_bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

unsigned bits_to_digits10(int bits);
int current_bits();
// 2^-current_bits
HPReal epsilon();

HPReal hp(const std::string& decimal);
HPReal hp(long num, long den);
// exact rationals ("1/3") or decimals ("0.3")
HPReal parse_real(const std::string& text);

// fixed digits, used by reports and CLI output
std::string to_decimal(const HPReal& x, int digits);
std::string to_sci(const HPReal& x, int digits);

}  // namespace hz
