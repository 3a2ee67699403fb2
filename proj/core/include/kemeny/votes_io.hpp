#pragma once

#include <iosfwd>
#include <string>

#include "kemeny/ranking.hpp"

namespace kemeny {

/// Votes file: UTF-8 text, `#` comment lines, optional `# candidates: <n>`
/// header, one vote per line as space-separated candidate indices
/// (most-preferred first) with an optional `w=<float>;` weight prefix.
/// The list kind is supplied by the caller, not inferred.
Dataset load_votes(std::istream& is, ListKind kind = ListKind::complete,
                   WeightScheme pair_weight = {});
Dataset load_votes_file(const std::string& path, ListKind kind = ListKind::complete,
                        WeightScheme pair_weight = {});

void save_votes(const Dataset& ds, std::ostream& os);
void save_votes_file(const Dataset& ds, const std::string& path);

/// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string file_hash_hex(const std::string& path);

}  // namespace kemeny
