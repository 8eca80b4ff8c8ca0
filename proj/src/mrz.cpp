#include "rde/mrz.hpp"

#include <algorithm>
#include <cctype>

#include "rde/apdu.hpp"
#include "rde/crypto.hpp"
#include "rde/errors.hpp"
#include "rde/secure_messaging.hpp"

namespace rde {

namespace {

int char_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c == '<') return 0;
    fail(Errc::malformed, "invalid character in machine-readable zone");
}

std::string pad_field(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() > width) fail(Errc::malformed, "zone field too long");
    out.append(width - out.size(), '<');
    return out;
}

void require_date(std::string_view s) {
    if (s.size() != 6 || !std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
        }))
        fail(Errc::malformed, "dates must be six digits (YYMMDD)");
}

void require_check(std::string_view field, char given, const char* what) {
    if (mrz_check_digit(field) != given)
        fail(Errc::malformed, std::string("wrong check digit for ") + what);
}

}  // namespace

char mrz_check_digit(std::string_view field) {
    static const int weights[3] = {7, 3, 1};
    int sum = 0;
    for (std::size_t i = 0; i < field.size(); ++i)
        sum += char_value(field[i]) * weights[i % 3];
    return static_cast<char>('0' + sum % 10);
}

std::pair<std::string, std::string> mrz_td3_lines(const MrzData& d) {
    require_date(d.birth_date);
    require_date(d.expiry_date);
    if (d.nationality.size() != 3) fail(Errc::malformed, "nationality must be three letters");
    if (d.sex != "M" && d.sex != "F" && d.sex != "<")
        fail(Errc::malformed, "sex must be M, F or <");

    std::string name = d.name;
    std::replace(name.begin(), name.end(), ' ', '<');
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    std::string line1 = "P<" + d.nationality + pad_field(name, 39);

    std::string doc = pad_field(d.doc_number, 9);
    std::string personal(14, '<');
    std::string line2 = doc;
    line2 += mrz_check_digit(doc);
    line2 += d.nationality;
    line2 += d.birth_date;
    line2 += mrz_check_digit(d.birth_date);
    line2 += d.sex;
    line2 += d.expiry_date;
    line2 += mrz_check_digit(d.expiry_date);
    line2 += personal;
    line2 += mrz_check_digit(personal);
    line2 += mrz_check_digit(line2.substr(0, 10) + line2.substr(13, 7) + line2.substr(21, 22));

    for (char c : line1 + line2) char_value(c);  // reject anything outside the charset
    return {line1, line2};
}

MrzData parse_mrz(std::string_view text) {
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;

    std::string line2;
    if (cleaned.size() == 44) {
        line2 = cleaned;
    } else if (cleaned.size() == 88) {
        line2 = cleaned.substr(44);
    } else {
        fail(Errc::malformed, "zone text must be one or two 44-character lines");
    }

    for (char c : line2) char_value(c);
    require_check(line2.substr(0, 9), line2[9], "document number");
    require_check(line2.substr(13, 6), line2[19], "birth date");
    require_check(line2.substr(21, 6), line2[27], "expiry date");
    require_check(line2.substr(28, 14), line2[42], "personal number");
    require_check(line2.substr(0, 10) + line2.substr(13, 7) + line2.substr(21, 22), line2[43],
                  "composite field");

    MrzData d;
    d.doc_number = line2.substr(0, 9);
    while (!d.doc_number.empty() && d.doc_number.back() == '<') d.doc_number.pop_back();
    d.nationality = line2.substr(10, 3);
    d.birth_date = line2.substr(13, 6);
    d.sex = line2.substr(20, 1);
    d.expiry_date = line2.substr(21, 6);
    if (cleaned.size() == 88) {
        std::string name = cleaned.substr(5, 39);
        while (!name.empty() && name.back() == '<') name.pop_back();
        d.name = name;
    }
    return d;
}

Bytes encode_dg1(const MrzData& d) {
    auto [line1, line2] = mrz_td3_lines(d);
    return tlv(0x61, tlv(0x5F1F, to_bytes(line1 + line2)));
}

MrzData parse_dg1(ByteView bytes) {
    auto outer = decode_tlv_sequence(bytes);
    const TlvObject* dg1 = find_tlv(outer, 0x61);
    if (outer.size() != 1 || !dg1) fail(Errc::malformed, "data group 1 must be a single tag-61 object");
    auto inner = decode_tlv_sequence(dg1->value);
    const TlvObject* zone = find_tlv(inner, 0x5F1F);
    if (!zone) fail(Errc::malformed, "data group 1 lacks the 5F1F zone object");
    return parse_mrz(to_string(zone->value));
}

Bytes bac_seed(const MrzData& d) {
    std::string doc = pad_field(d.doc_number, 9);
    require_date(d.birth_date);
    require_date(d.expiry_date);
    std::string input = doc + mrz_check_digit(doc) + d.birth_date +
                        mrz_check_digit(d.birth_date) + d.expiry_date +
                        mrz_check_digit(d.expiry_date);
    Bytes digest = crypto::sha1(to_bytes(input));
    digest.resize(16);
    return digest;
}

BacKeys bac_keys(const MrzData& d) {
    Bytes seed = bac_seed(d);
    return {derive_key(seed, 1, CipherSuite::tdes_cbc_cbc),
            derive_key(seed, 2, CipherSuite::tdes_cbc_cbc)};
}

}  // namespace rde
