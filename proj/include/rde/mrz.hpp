#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "rde/bytes.hpp"

namespace rde {

/// Fields feeding the machine-readable zone of a TD3 (passport-book)
/// document. Dates are YYMMDD; the document number may be shorter than
/// nine characters and is filler-padded in the zone itself.
struct MrzData {
    std::string doc_number;
    std::string birth_date;
    std::string expiry_date;
    std::string nationality = "NLD";
    std::string sex = "<";
    std::string name;  // "SURNAME<<GIVEN<NAMES"
};

/// ICAO 7-3-1 check digit over digits, letters and '<'.
char mrz_check_digit(std::string_view field);

/// Composes the two 44-character lines.
std::pair<std::string, std::string> mrz_td3_lines(const MrzData& d);

/// Accepts the 44-character second line, both lines glued together (88),
/// or both lines separated by whitespace. Check digits are verified.
MrzData parse_mrz(std::string_view text);

/// LDS data group 1: tag 61 wrapping tag 5F1F with the full zone text.
Bytes encode_dg1(const MrzData& d);
MrzData parse_dg1(ByteView bytes);

/// Document key seed: SHA-1 over doc-number, birth and expiry fields,
/// each followed by its check digit; first 16 bytes.
Bytes bac_seed(const MrzData& d);

struct BacKeys {
    Bytes kenc;
    Bytes kmac;
};

BacKeys bac_keys(const MrzData& d);

}  // namespace rde
