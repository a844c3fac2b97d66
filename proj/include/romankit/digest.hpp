#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace romankit {

// Lowercase-hex SHA-256 of bytes.
std::string sha256_hex(std::string_view bytes);

// Canonical content digest of a line sequence: SHA-256 over each line
// followed by '\n'. Identical lines yield identical digests on every
// platform; used for corpora and vocabularies alike.
std::string digest_of_lines(const std::vector<std::string>& lines);

}  // namespace romankit
