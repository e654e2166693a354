#pragma once

#include <string>

#include "zplab/biorth.hpp"
#include "zplab/blocks.hpp"
#include "zplab/seq.hpp"

namespace zplab {

/// 17 significant digits, the round-trip precision of double.
std::string format_double(double v);

/// {"entries": [[index, value], ...]} with strictly increasing indices.
std::string seq_to_json(const SeqVector& x);
/// {"x": ..., "y": ...}.
std::string twisted_to_json(const TwistedVector& z);

std::string growth_table_to_csv(const GrowthTable& table);
std::string growth_table_to_json(const GrowthTable& table);

std::string system_to_json(const BiorthSystem& sys);

SeqVector seq_from_json(const std::string& text);
BiorthSystem system_from_json(const std::string& text);
BiorthSystem load_system(const std::string& path);

/// JSON array of vectors.
std::vector<SeqVector> seq_list_from_json(const std::string& text);
/// JSON array of {"x": ..., "y": ...} pairs at a common exponent.
std::vector<TwistedVector> pairs_from_json(const std::string& text,
                                           const PExponent& p);
std::string read_file(const std::string& path);

}  // namespace zplab
