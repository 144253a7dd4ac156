#include "hzeta/hpreal.hpp"

#include "hzeta/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hz {

unsigned bits_to_digits10(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

int PrecisionConfig::digits10() const { return static_cast<int>(bits_to_digits10(working_bits())); }

PrecisionConfig PrecisionConfig::from_env() {
    PrecisionConfig cfg;
    if (const char* env = std::getenv("HZETA_PREC")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 64)
            throw DomainError("HZETA_PREC must be an integer >= 64");
        cfg.bits = static_cast<int>(v);
    }
    return cfg;
}

PrecisionScope::PrecisionScope(const PrecisionConfig& cfg) : PrecisionScope(cfg.working_bits()) {
    if (cfg.bits < 64) throw DomainError("precision must be at least 64 bits");
}

PrecisionScope::PrecisionScope(int working_bits) : saved_(HPReal::default_precision()) {
    HPReal::default_precision(bits_to_digits10(working_bits));
}

PrecisionScope::~PrecisionScope() { HPReal::default_precision(saved_); }

int current_bits() {
    return static_cast<int>(std::ceil(HPReal::default_precision() * 3.3219280948873623));
}

HPReal epsilon() { return ldexp(HPReal(1), -current_bits()); }

HPReal hp(const std::string& decimal) { return HPReal(decimal); }

HPReal hp(long num, long den) { return HPReal(num) / HPReal(den); }

HPReal parse_real(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            HPReal num(text.substr(0, slash));
            HPReal den(text.substr(slash + 1));
            if (den == 0) throw DomainError("zero denominator in '" + text + "'");
            return num / den;
        }
        return HPReal(text);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("cannot parse real '" + text + "'");
    }
}

std::string to_decimal(const HPReal& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

std::string to_sci(const HPReal& x, int digits) {
    std::ostringstream os;
    os << std::scientific;
    os.precision(digits);
    os << x;
    return os.str();
}

}  // namespace hz
