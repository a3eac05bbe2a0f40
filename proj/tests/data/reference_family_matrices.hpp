#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace primeweb::testdata {

// Published leading rows of progression matrices for prime subfamilies:
// family tag, generator, then depths 1, 2, ...
struct FamilyRow {
    std::string_view family;
    std::uint64_t generator;
    std::vector<std::uint64_t> values;
};

inline const std::vector<FamilyRow>& reference_family_rows() {
    static const std::vector<FamilyRow> rows{
        {"T1", 1, {3, 11, 137, 5639, 641129, 152921807}},
        {"T1", 2, {5, 29, 641, 44381, 7212059}},
        {"T1", 4, {17, 239, 12161, 1583927}},
        {"T1", 6, {41, 1151, 93251, 16989317}},
        {"T1", 7, {59, 1931, 176021, 35263691}},
        {"T1", 8, {71, 2339, 221201, 45749309}},
        {"S", 1, {2, 23, 263, 2917, 38639, 603311, 11093633}},
        {"S", 3, {37, 397, 4751, 64403, 1038629, 19661749}},
        {"S", 4, {47, 491, 5897, 81131, 1328167, 25467419}},
        {"S", 5, {53, 557, 6709, 93287, 1541191, 29778547}},
        {"S", 22, {257, 2861, 37799, 589181, 10821757, 230452837}},
        {"S", 24, {277, 3079, 40823, 640121, 11807167, 252480587}},
        {"D6n-1", 1, {5, 29, 263, 3767, 76253, 2049263, 69633521}},
        {"D6n-1", 2, {11, 83, 953, 16223, 381221, 11579489}},
        {"D6n-1", 3, {17, 137, 1721, 31883, 795803, 25434641}},
        {"D6n-1", 4, {23, 197, 2663, 51803, 1348961, 44635001}},
        {"D6n-1", 6, {41, 419, 6329, 135347, 3808109, 134441441}},
        {"D6n+1", 1, {7, 61, 727, 12343, 284083, 8457367, 312953941}},
        {"D6n+1", 2, {13, 109, 1429, 26113, 642937, 20262883, 787318099}},
        {"D6n+1", 3, {19, 181, 2539, 49669, 1291471, 42627997}},
        {"D6n+1", 4, {31, 331, 5011, 105277, 2908753, 10144807}},
        {"D6n+1", 5, {37, 397, 6211, 133633, 3761239, 132710947}},
        {"H", 1, {2, 5, 101, 746497, 286961228404901ull}},
        {"H", 3, {17, 7057, 11424189457ull}},
        {"H", 4, {37, 44101, 637723627777ull}},
        {"H", 6, {197, 3496901}},
        {"H", 7, {257, 6421157}},
        {"Euler", 1, {41, 1847, 1573316}},
    };
    return rows;
}

}  // namespace primeweb::testdata
