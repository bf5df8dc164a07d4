#pragma once

// Golden witnesses used across the unit and acceptance suites: the six
// table rows found by the bounded search plus the five explicit
// curve-derived examples.

#include <array>
#include <vector>

#include "gpcircle/circle.hpp"

namespace gpc::golden {

struct WitnessData {
    const char* u2;  // triple parameters when applicable, else nullptr
    const char* u3;
    const char* r;
    const char* h;
    const char* a;
    std::array<std::array<const char*, 2>, 4> points;
};

inline GPWitness make_witness(const WitnessData& d) {
    GPWitness w;
    w.circle.h = parse_rat(d.h);
    w.circle.a = parse_rat(d.a);
    w.ratio = parse_rat(d.r);
    for (int i = 0; i < 4; ++i) {
        w.points[static_cast<std::size_t>(i)].x = parse_rat(d.points[static_cast<std::size_t>(i)][0]);
        w.points[static_cast<std::size_t>(i)].y = parse_rat(d.points[static_cast<std::size_t>(i)][1]);
    }
    return w;
}

inline CanonicalWitness make_canonical(const WitnessData& d) {
    GPWitness w = make_witness(d);
    CanonicalWitness c{w.circle, w.points, w.ratio};
    return c;
}

/// The six search results with all abscissae below 10^4.
inline const std::vector<WitnessData>& table1() {
    static const std::vector<WitnessData> rows = {
        {"1/3", "0", "5/3", "75", "50",
         {{{"27", "14"}, {"45", "40"}, {"75", "50"}, {"125", "0"}}}},
        {"3/5", "1/3", "8/3", "447", "425",
         {{{"27", "65"}, {"72", "200"}, {"192", "340"}, {"512", "420"}}}},
        {"11/23", "1/5", "5/2", "5075", "4875",
         {{{"512", "1716"}, {"1280", "3060"}, {"3200", "4500"}, {"8000", "3900"}}}},
        {"11/23", "4/7", "5/3", "-2125", "3250",
         {{{"243", "2226"}, {"405", "2040"}, {"675", "1650"}, {"1125", "0"}}}},
        {"11/29", "1/31", "16/9", "4825", "3367",
         {{{"1458", "0"}, {"2592", "2520"}, {"4608", "3360"}, {"8192", "0"}}}},
        {"3/5", "21/67", "3", "2559", "2465",
         {{{"128", "408"}, {"384", "1160"}, {"1152", "2024"}, {"3456", "2296"}}}},
    };
    return rows;
}

/// One-axis pipeline output for generator (-40, 900): ratio 5/3,
/// progression ending on the x-axis.
inline const WitnessData& one_axis_witness_g1() {
    static const WitnessData d = {nullptr, nullptr, "5/3", "-13725", "34850",
                                  {{{"4563", "29666"},
                                    {"7605", "27560"},
                                    {"12675", "22750"},
                                    {"21125", "0"}}}};
    return d;
}

/// One-axis pipeline output for generator (14, 288).
inline const WitnessData& one_axis_witness_g2() {
    static const WitnessData d = {nullptr, nullptr, "5/3", "202590875", "206469250",
                                  {{{"88356987", "171988866"},
                                    {"147261645", "198917640"},
                                    {"245436075", "201974850"},
                                    {"409060125", "0"}}}};
    return d;
}

/// The ratio-8 progression starting at (h-a, 0) (verification corpus only).
inline const WitnessData& ratio8_witness() {
    static const WitnessData d = {nullptr, nullptr, "8", "966123", "963235",
                                  {{{"2888", "0"},
                                    {"23104", "196308"},
                                    {"184832", "563388"},
                                    {"1478656", "815556"}}}};
    return d;
}

/// Symmetric pipeline output for the triple of the rank-1 generator.
inline const WitnessData& symmetric_witness() {
    static const WitnessData d = {nullptr, nullptr, "21/11", "15888", "19825",
                                  {{{"3993", "15860"},
                                    {"7623", "18020"},
                                    {"14553", "19780"},
                                    {"27783", "15860"}}}};
    return d;
}

/// General pipeline output as published: rational (non-integral) points.
inline const WitnessData& general_witness_published() {
    static const WitnessData d = {
        nullptr, nullptr, "554537833/229516311", "14942502807", "13813414685",
        {{{"632132844180584652/554537833", "303396613510115972/554537833"},
          {"2754195732", "6500430440"},
          {"6654453996", "11050731748"},
          {"1230048832913343556/76505437", "1053225199474661304/76505437"}}}};
    return d;
}

/// The same witness in canonical (coprime-integer) form.
inline const WitnessData& general_witness_canonical() {
    static const WitnessData d = {
        nullptr, nullptr, "554537833/229516311", "633938061131207184273844947",
        "586036317751801981041838385",
        {{{"48361599486088535716752924", "23211490500911526358539764"},
          {"116847192526676024531046372", "275781796589083285196159240"},
          {"282316270480125995648741916", "468829054201441584833470708"},
          {"682108614287944612328754148", "584053219777671417929114232"}}}};
    return d;
}

/// Table rows plus the five explicit curve-derived witnesses.
inline std::vector<WitnessData> full_corpus() {
    std::vector<WitnessData> all = table1();
    all.push_back(one_axis_witness_g1());
    all.push_back(one_axis_witness_g2());
    all.push_back(ratio8_witness());
    all.push_back(symmetric_witness());
    all.push_back(general_witness_published());
    return all;
}

}  // namespace gpc::golden
