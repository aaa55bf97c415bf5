#include "dentage/fdi.hpp"

#include "dentage/errors.hpp"

namespace dentage {

ToothId::ToothId(int fdi_code) : code_(fdi_code) {
    const int q = fdi_code / 10;
    const int p = fdi_code % 10;
    if (q < 1 || q > 8 || p < 1 || p > 8) {
        throw Error::domain("domain", "INVALID_TOOTH_CODE",
                            "not a well-formed FDI code: " + std::to_string(fdi_code));
    }
}

const ToothId* posterior_mandibular_teeth() {
    static const ToothId teeth[kPosteriorMandibularCount] = {
        ToothId(34), ToothId(35), ToothId(36), ToothId(37), ToothId(38),
        ToothId(44), ToothId(45), ToothId(46), ToothId(47), ToothId(48),
    };
    return teeth;
}

}  // namespace dentage
