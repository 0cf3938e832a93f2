#include "rumorcluster/timestamp.hpp"

#include "rumorcluster/error.hpp"

#include <array>
#include <cstdio>

namespace rumorcluster {

namespace {

const std::array<const char*, 7> kWeekdays = {"Sun", "Mon", "Tue", "Wed",
                                              "Thu", "Fri", "Sat"};
const std::array<const char*, 12> kMonths = {"Jan", "Feb", "Mar", "Apr",
                                             "May", "Jun", "Jul", "Aug",
                                             "Sep", "Oct", "Nov", "Dec"};

[[noreturn]] void fail(const std::string& s, std::size_t pos, const std::string& what) {
    throw InputError("bad timestamp \"" + s + "\": " + what + " at position " +
                     std::to_string(pos));
}

bool is_leap(long y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(long y, int m) {
    static const int d[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return d[m - 1];
}

// Days from 1970-01-01 to y-m-d (proleptic Gregorian), Hinnant's formula.
std::int64_t days_from_civil(long y, int m, int d) {
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, long& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long yr = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = yr + (m <= 2);
}

int parse_fixed_digits(const std::string& s, std::size_t pos, int count) {
    int v = 0;
    for (int i = 0; i < count; ++i) {
        const char c = pos + i < s.size() ? s[pos + i] : '\0';
        if (c < '0' || c > '9') fail(s, pos + i, "expected digit");
        v = v * 10 + (c - '0');
    }
    return v;
}

void expect_char(const std::string& s, std::size_t pos, char c, const char* what) {
    if (pos >= s.size() || s[pos] != c) fail(s, pos, what);
}

} // namespace

std::int64_t parse_twitter_timestamp(const std::string& s) {
    // EEE MMM dd HH:mm:ss +zzzz yyyy -- fixed width, 30 characters.
    if (s.size() != 30) {
        fail(s, s.size() < 30 ? s.size() : 30, "expected 30-character timestamp");
    }
    bool known_day = false;
    for (const char* w : kWeekdays) {
        if (s.compare(0, 3, w) == 0) { known_day = true; break; }
    }
    if (!known_day) fail(s, 0, "unknown day name");
    expect_char(s, 3, ' ', "expected space after day");

    int month = 0;
    for (int i = 0; i < 12; ++i) {
        if (s.compare(4, 3, kMonths[i]) == 0) { month = i + 1; break; }
    }
    if (month == 0) fail(s, 4, "unknown month name");
    expect_char(s, 7, ' ', "expected space after month");

    const int day = parse_fixed_digits(s, 8, 2);
    expect_char(s, 10, ' ', "expected space after day-of-month");
    const int hour = parse_fixed_digits(s, 11, 2);
    expect_char(s, 13, ':', "expected ':'");
    const int minute = parse_fixed_digits(s, 14, 2);
    expect_char(s, 16, ':', "expected ':'");
    const int second = parse_fixed_digits(s, 17, 2);
    expect_char(s, 19, ' ', "expected space before zone");

    int zone_sign;
    if (s[20] == '+') zone_sign = 1;
    else if (s[20] == '-') zone_sign = -1;
    else fail(s, 20, "expected zone sign");
    const int zone_hours = parse_fixed_digits(s, 21, 2);
    const int zone_minutes = parse_fixed_digits(s, 23, 2);
    expect_char(s, 25, ' ', "expected space before year");
    const int year = parse_fixed_digits(s, 26, 4);

    if (day < 1 || day > days_in_month(year, month)) fail(s, 8, "day out of range");
    if (hour > 23) fail(s, 11, "hour out of range");
    if (minute > 59) fail(s, 14, "minute out of range");
    if (second > 60) fail(s, 17, "second out of range"); // leap second tolerated
    if (zone_minutes > 59) fail(s, 23, "zone minutes out of range");

    const std::int64_t days = days_from_civil(year, month, day);
    const std::int64_t local = days * 86400 + hour * 3600 + minute * 60 + second;
    const std::int64_t offset = zone_sign * (zone_hours * 3600 + zone_minutes * 60);
    return local - offset;
}

std::string format_twitter_timestamp(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t tod = epoch_seconds % 86400;
    if (tod < 0) {
        tod += 86400;
        days -= 1;
    }
    long y;
    int m, d;
    civil_from_days(days, y, m, d);
    // 1970-01-01 was a Thursday (weekday index 4 of Sun..Sat).
    const int weekday = static_cast<int>(((days % 7) + 7 + 4) % 7);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s %s %02d %02d:%02d:%02d +0000 %04ld",
                  kWeekdays[static_cast<std::size_t>(weekday)],
                  kMonths[static_cast<std::size_t>(m - 1)], d,
                  static_cast<int>(tod / 3600), static_cast<int>((tod / 60) % 60),
                  static_cast<int>(tod % 60), y);
    return buf;
}

} // namespace rumorcluster
