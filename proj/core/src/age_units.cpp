#include "dentage/age_units.hpp"

#include <algorithm>
#include <cmath>

#include "dentage/errors.hpp"

namespace dentage {

YearsMonths age_to_years_months(double age_days) {
    if (!(age_days >= 0.0)) {
        throw Error::domain("domain", "INVALID_AGE",
                            "age in days must be non-negative, got " + std::to_string(age_days));
    }
    const int years = static_cast<int>(std::floor(age_days / kDaysPerYear));
    const double remainder = age_days - years * kDaysPerYear;
    int months = static_cast<int>(std::floor(remainder / kDaysPerMonth));
    months = std::clamp(months, 0, 11);
    return YearsMonths{years, months};
}

}  // namespace dentage
