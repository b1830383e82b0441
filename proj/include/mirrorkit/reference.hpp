#pragma once

#include <mirrorkit/bps.hpp>

#include <array>
#include <optional>

namespace mirrorkit {

/// Published genus-0 BPS tables for the two-parameter models, in the layout
/// rows d1 = 0..10, columns d2 = 0..5. Entries are stored as strings since
/// the deep rows exceed 64 bits.
namespace reference {

inline const std::array<std::array<const char*, 6>, 11>& bps_x1_table()
{
    static const std::array<std::array<const char*, 6>, 11> t = {{
        {"0", "120", "105", "105", "120", "90"},
        {"120", "2085", "15690", "83400", "362850", "1365060"},
        {"105", "15690", "569475", "9690270", "107459880", "901887570"},
        {"105", "83400", "9690270", "418812780", "10086474180", "164859436335"},
        {"120", "362850", "107459880", "10086474180", "472152998265", "13800385325580"},
        {"90", "1365060", "901887570", "164859436335", "13800385325580", "675995017391805"},
        {"120", "4621020", "6204484125", "2041590595410", "286700834960805", "22351196770131870"},
        {"105", "14399490", "36701125005", "20496053409240", "4593254607725475",
         "546563929916334210"},
        {"105", "41932200", "192593575110", "174405931797135", "59937858896889555",
         "10518492857890739820"},
        {"120", "115485075", "916315955820", "1297448843314125", "661998422042833065",
         "166511015537610566130"},
        {"90", "303166710", "4015843886955", "8630138044756890", "6364684023911207415",
         "2240097475662256021890"},
    }};
    return t;
}

inline const std::array<std::array<const char*, 6>, 11>& bps_y1_table()
{
    static const std::array<std::array<const char*, 6>, 11> t = {{
        {"0", "30", "0", "0", "0", "0"},
        {"105", "330", "105", "0", "0", "0"},
        {"120", "2865", "6585", "2865", "120", "0"},
        {"120", "17400", "151260", "283755", "151260", "17400"},
        {"105", "87150", "2141265", "11044335", "18347055", "11044335"},
        {"90", "368670", "22279830", "256967580", "974066175", "1488072900"},
        {"105", "1377840", "186120810", "4267143150", "31595446320", "97322962410"},
        {"120", "4644030", "1311908070", "55405726800", "729262582320", "4007703642030"},
        {"120", "14441100", "8065898475", "594374999280", "13050194338080", "118409369639565"},
        {"105", "42003450", "44272540830", "5463083502630", "191094069663765",
         "2712537543756540"},
        {"90", "115593255", "220759120890", "44140588111590", "2375090868607470",
         "50686607599977960"},
    }};
    return t;
}

/// Table lookup with the d1 <-> d2 symmetry of the X1 table applied when the
/// requested column is out of range.
inline std::optional<Integer> bps_x1(int d1, int d2)
{
    const auto& t = bps_x1_table();
    if (d1 >= 0 && d1 <= 10 && d2 >= 0 && d2 <= 5) return Integer(t[d1][d2]);
    if (d2 >= 0 && d2 <= 10 && d1 >= 0 && d1 <= 5) return Integer(t[d2][d1]);
    return std::nullopt;
}

inline std::optional<Integer> bps_y1(int d1, int d2)
{
    const auto& t = bps_y1_table();
    if (d1 >= 0 && d1 <= 10 && d2 >= 0 && d2 <= 5) return Integer(t[d1][d2]);
    return std::nullopt;
}

/// Hodge pairs (h11, h21) of the resolved fiber products i = 0..3 ...
inline std::array<std::pair<int, int>, 4> hodge_mirrors()
{
    return {{{51, 1}, {47, 2}, {47, 2}, {43, 3}}};
}

/// ... and of the linear-section threefolds they are mirror to.
inline std::array<std::pair<int, int>, 4> hodge_primal()
{
    return {{{1, 51}, {2, 47}, {2, 47}, {3, 43}}};
}

} // namespace reference
} // namespace mirrorkit
