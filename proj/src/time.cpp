#include "gpcgate/time.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace gpcgate {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    y = static_cast<int>(yy + (m <= 2));
}

struct DateParts {
    int year = 0, month = 0, day = 0;
};

// Parses "YYYY-MM-DD" with range checks. Returns nullopt on any deviation.
std::optional<DateParts> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto ys = s.substr(0, 4), ms = s.substr(5, 2), ds = s.substr(8, 2);
    if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) return std::nullopt;
    DateParts p{to_int(ys), to_int(ms), to_int(ds)};
    if (p.month < 1 || p.month > 12) return std::nullopt;
    if (p.day < 1 || p.day > days_in_month(p.year, p.month)) return std::nullopt;
    return p;
}

struct TimeParts {
    int hour = 0, minute = 0, second = 0;
    int millis = 0;
    int offset_minutes = 0;  // to subtract to reach UTC
};

// Parses "HH:MM:SS[.frac](Z|±HH:MM)".
std::optional<TimeParts> parse_time(std::string_view s) {
    if (s.size() < 9) return std::nullopt;
    if (s[2] != ':' || s[5] != ':') return std::nullopt;
    auto hs = s.substr(0, 2), mins = s.substr(3, 2), secs = s.substr(6, 2);
    if (!all_digits(hs) || !all_digits(mins) || !all_digits(secs)) return std::nullopt;
    TimeParts t;
    t.hour = to_int(hs);
    t.minute = to_int(mins);
    t.second = to_int(secs);
    if (t.hour > 23 || t.minute > 59 || t.second > 60) return std::nullopt;  // 60 = leap second
    std::size_t pos = 8;
    if (pos < s.size() && s[pos] == '.') {
        std::size_t fs = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == fs) return std::nullopt;
        std::string frac(s.substr(fs, pos - fs));
        frac.resize(3, '0');  // truncate/pad to milliseconds
        t.millis = to_int(frac);
    }
    if (pos >= s.size()) return std::nullopt;
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
        return pos + 1 == s.size() ? std::optional<TimeParts>(t) : std::nullopt;
    }
    if (c != '+' && c != '-') return std::nullopt;
    auto off = s.substr(pos + 1);
    if (off.size() != 5 || off[2] != ':') return std::nullopt;
    auto oh = off.substr(0, 2), om = off.substr(3, 2);
    if (!all_digits(oh) || !all_digits(om)) return std::nullopt;
    int ohv = to_int(oh), omv = to_int(om);
    if (ohv > 23 || omv > 59) return std::nullopt;
    t.offset_minutes = (ohv * 60 + omv) * (c == '-' ? -1 : 1);
    return t;
}

}  // namespace

Timestamp now_utc() {
    return std::chrono::time_point_cast<std::chrono::milliseconds>(std::chrono::system_clock::now());
}

std::string rfc3339_format(Timestamp t) {
    std::int64_t ms_total = t.time_since_epoch().count();
    std::int64_t days = ms_total / 86400000;
    std::int64_t rem = ms_total % 86400000;
    if (rem < 0) {
        rem += 86400000;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    int ms = static_cast<int>(rem % 1000);
    int total_s = static_cast<int>(rem / 1000);
    int h = total_s / 3600, min = (total_s / 60) % 60, s = total_s % 60;
    char buf[40];
    if (ms != 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", y, m, d, h, min, s, ms);
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d, h, min, s);
    }
    return buf;
}

std::optional<Timestamp> rfc3339_parse(std::string_view text) {
    auto sep = text.find_first_of("Tt ");
    if (sep == std::string_view::npos || sep != 10) return std::nullopt;
    auto date = parse_date(text.substr(0, 10));
    if (!date) return std::nullopt;
    auto time = parse_time(text.substr(11));
    if (!time) return std::nullopt;
    std::int64_t days = days_from_civil(date->year, date->month, date->day);
    // Leap second 60 clamps to 59.999 within the minute.
    int sec = time->second == 60 ? 59 : time->second;
    std::int64_t ms = ((days * 24 + time->hour) * 60 + time->minute) * 60000 + sec * 1000 + time->millis;
    ms -= static_cast<std::int64_t>(time->offset_minutes) * 60000;
    return timestamp_from_millis(ms);
}

bool is_iso8601_date_or_datetime(std::string_view text) {
    if (text.size() == 10) return parse_date(text).has_value();
    if (text.size() > 11 && (text[10] == 'T' || text[10] == 't')) {
        return parse_date(text.substr(0, 10)).has_value() && parse_time(text.substr(11)).has_value();
    }
    return false;
}

}  // namespace gpcgate
