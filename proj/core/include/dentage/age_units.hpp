#pragma once

namespace dentage {

// Fixed, calendar-independent unit conventions: ages are stored in days and
// rendered as whole years and months.
inline constexpr double kDaysPerYear = 365.25;
inline constexpr double kDaysPerMonth = 30.4375;  // 365.25 / 12

struct YearsMonths {
    int years = 0;
    int months = 0;  // 0..11
};

// Floor decomposition: years = floor(d / 365.25), months = floor(rem / 30.4375)
// clamped to 11. Throws INVALID_AGE for negative input.
YearsMonths age_to_years_months(double age_days);

inline double years_to_days(double years) { return years * kDaysPerYear; }
inline double days_to_years(double days) { return days / kDaysPerYear; }

}  // namespace dentage
