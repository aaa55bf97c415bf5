#pragma once

#include <compare>
#include <string>

namespace dentage {

// Two-digit FDI tooth code: first digit is the quadrant (4 = lower right,
// 3 = lower left), second the position counted from the midline (4-5
// premolars, 6-8 molars). Any well-formed code is representable; whether a
// tooth is acceptable for measurements/predictions is a validation concern.
class ToothId {
public:
    explicit ToothId(int fdi_code);

    int code() const { return code_; }
    int quadrant() const { return code_ / 10; }
    int position() const { return code_ % 10; }

    bool mandibular() const { return quadrant() == 3 || quadrant() == 4; }
    bool right_mandibular() const { return quadrant() == 4; }
    // The annotated set: 34-38 and 44-48.
    bool posterior_mandibular() const { return mandibular() && position() >= 4 && position() <= 8; }
    bool molar() const { return position() >= 6 && position() <= 8; }

    std::string str() const { return std::to_string(code_); }

    auto operator<=>(const ToothId&) const = default;

private:
    int code_;
};

// All ten teeth the engine works with, ascending FDI order.
const ToothId* posterior_mandibular_teeth();
inline constexpr int kPosteriorMandibularCount = 10;

}  // namespace dentage
