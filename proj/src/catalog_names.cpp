#include "gdd/catalog.hpp"

namespace gdd {

namespace {

// The 233 design type names shipped in data/, sorted.
constexpr std::string_view kCatalogTypeNames[] = {
    "10^10 18^1", "10^20 38^1", "11^20 19^1", "12^10 16^1", "12^10 28^1", "12^10 8^1",
    "12^11 20^1", "12^12 24^1", "12^12 4^1", "12^13 28^1", "12^13 8^1", "12^14 32^1",
    "12^15 16^1", "12^15 28^1", "12^15 36^1", "12^15 48^1", "12^15 8^1", "12^16 20^1",
    "12^16 40^1", "12^17 24^1", "12^17 44^1", "12^17 4^1", "12^18 28^1", "12^18 48^1",
    "12^18 8^1", "12^19 32^1", "12^19 52^1", "12^20 8^1", "12^21 20^1", "12^21 40^1",
    "12^21 60^1", "12^22 24^1", "12^22 44^1", "12^22 4^1", "12^22 64^1", "12^23 28^1",
    "12^23 48^1", "12^23 68^1", "12^24 32^1", "12^24 52^1", "12^27 4^1", "12^5 8^1",
    "13^12 1^1", "13^12 21^1", "13^12 41^1", "13^16 25^1", "13^16 5^1", "13^20 1^1",
    "13^8 17^1", "14^8 6^1", "16^10 20^1", "16^10 28^1", "16^10 36^1", "16^10 40^1",
    "16^10 8^1", "16^11 20^1", "16^11 40^1", "16^12 12^1", "16^12 52^1", "16^13 24^1",
    "16^13 44^1", "16^13 4^1", "16^14 36^1", "16^15 28^1", "16^15 8^1", "16^16 20^1",
    "16^16 40^1", "16^17 12^1", "16^6 20^1", "16^7 12^1", "16^8 4^1", "16^9 36^1",
    "17^12 29^1", "17^12 49^1", "17^12 9^1", "17^16 5^1", "17^8 13^1", "17^8 33^1",
    "1^100 13^1", "1^100 25^1", "1^100 9^1", "1^104 21^1", "1^108 29^1", "1^108 9^1",
    "1^112 17^1", "1^124 21^1", "1^128 29^1", "1^128 9^1", "1^132 17^1", "1^132 37^1",
    "1^136 25^1", "1^144 21^1", "1^144 41^1", "1^148 29^1", "1^152 17^1", "1^152 37^1",
    "1^156 25^1", "1^156 45^1", "1^16 9^5", "1^160 33^1", "1^164 21^1", "1^164 41^1",
    "1^168 29^1", "1^168 49^1", "1^172 17^1", "1^176 25^1", "1^176 45^1", "1^184 21^1",
    "1^184 41^1", "1^188 29^1", "1^192 17^1", "1^192 37^1", "1^192 57^1", "1^196 25^1",
    "1^196 45^1", "1^46 5^3", "1^48 9^1", "1^60 13^1", "1^60 9^1", "1^68 9^1", "1^72 17^1",
    "1^80 13^1", "1^80 25^1", "1^80 9^1", "1^84 21^1", "1^88 9^1", "1^92 17^1", "1^96 25^1",
    "20^10 36^1", "20^10 40^1", "20^11 40^1", "20^8 40^1", "20^9 40^1", "21^12 17^1",
    "21^8 29^1", "21^8 9^1", "23^8 7^1", "24^10 12^1", "24^10 32^1", "24^10 4^1", "24^11 20^1",
    "24^6 20^1", "24^7 28^1", "24^7 8^1", "24^8 16^1", "24^8 36^1", "24^9 44^1", "24^9 4^1",
    "25^8 45^1", "25^8 5^1", "28^10 24^1", "28^10 4^1", "28^6 20^1", "28^6 40^1", "28^7 16^1",
    "28^7 36^1", "28^8 12^1", "28^8 32^1", "28^8 52^1", "28^9 48^1", "28^9 8^1", "29^8 1^1",
    "29^8 21^1", "2^32 14^1", "2^40 6^1", "2^48 18^1", "2^52 14^1", "2^56 10^1", "2^60 6^1",
    "32^6 20^1", "32^6 40^1", "32^7 24^1", "32^7 44^1", "32^7 4^1", "32^8 28^1", "32^8 8^1",
    "32^9 12^1", "36^6 20^1", "36^6 40^1", "36^7 12^1", "36^7 32^1", "36^8 24^1", "3^20 11^1",
    "3^28 7^1", "3^32 11^1", "3^36 15^1", "40^6 20^1", "44^6 20^1", "44^6 40^1", "44^7 8^1",
    "48^6 20^1", "4^5 8^5", "5^24 25^1", "5^28 25^1", "5^32 25^1", "5^32 45^1", "5^36 45^1",
    "5^40 45^1", "5^44 25^1", "5^44 45^1", "6^16 10^1", "8^10 16^1", "8^10 20^1", "8^14 28^1",
    "8^15 16^1", "8^15 24^1", "8^15 36^1", "8^15 4^1", "8^16 20^1", "8^17 16^1", "8^18 32^1",
    "8^20 44^1", "8^21 20^1", "8^21 40^1", "8^22 16^1", "8^22 36^1", "8^23 32^1", "8^24 28^1",
    "8^25 24^1", "8^25 4^1", "8^26 20^1", "8^27 16^1", "8^28 12^1", "8^8 12^1", "9^12 13^1",
    "9^16 25^1", "9^16 5^1", "9^20 17^1", "9^20 29^1", "9^20 37^1", "9^20 49^1", "9^28 1^1",
    "9^8 1^1"
};

}  // namespace

std::span<const std::string_view> catalog_type_names() {
  return kCatalogTypeNames;
}

}  // namespace gdd
