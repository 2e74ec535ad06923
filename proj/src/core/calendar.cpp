#include "lvf/core/calendar.hpp"

namespace lvf {

namespace {

CivilDate first_monday_of_year(std::chrono::year y) {
    using namespace std::chrono;
    CivilDate jan1 = y / January / 1;
    weekday wd{jan1};
    int offset = (Monday - wd).count();  // days until the next Monday, 0..6
    return jan1 + days{offset};
}

}  // namespace

int week_of_year(CivilDate date) {
    using namespace std::chrono;
    year_month_day ymd{date};
    CivilDate monday = first_monday_of_year(ymd.year());
    if (date < monday) return kWeeksPerYear;
    auto week = (date - monday).count() / 7 + 1;
    if (week > kWeeksPerYear) return kWeeksPerYear;
    return static_cast<int>(week);
}

int iso_weekday(CivilDate date) {
    return static_cast<int>(std::chrono::weekday{date}.iso_encoding());
}

}  // namespace lvf
