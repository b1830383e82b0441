#pragma once

#include <mirrorkit/series.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace mirrorkit {

/// Text format for series exchange/caching.
///
///   vars <name1> <name2> ... cap <N>
///   d1 d2 ... dk : num/den        (one line per term, sorted lexicographically)
inline void write_series(std::ostream& os, const TruncatedSeries& s)
{
    os << "vars";
    for (const auto& v : s.vars()) os << ' ' << v;
    os << " cap " << s.cap() << '\n';
    for (const auto& [m, c] : s.coefficients()) {
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
        os << " : " << to_string(c) << '\n';
    }
}

inline std::string series_to_string(const TruncatedSeries& s)
{
    std::ostringstream os;
    write_series(os, s);
    return os.str();
}

inline TruncatedSeries read_series(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("series: missing header");
    std::istringstream hs(line);
    std::string tok;
    hs >> tok;
    if (tok != "vars") throw std::invalid_argument("series: bad header");
    std::vector<std::string> vars;
    while (hs >> tok && tok != "cap") vars.push_back(tok);
    int cap = -1;
    if (!(hs >> cap)) throw std::invalid_argument("series: bad cap");
    TruncatedSeries s(vars, cap);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Mono m(vars.size());
        for (auto& e : m)
            if (!(ls >> e)) throw std::invalid_argument("series: bad exponent line");
        std::string colon, val;
        if (!(ls >> colon >> val) || colon != ":")
            throw std::invalid_argument("series: bad coefficient line");
        s.set(m, rational_from_string(val));
    }
    return s;
}

inline TruncatedSeries series_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_series(is);
}

} // namespace mirrorkit
