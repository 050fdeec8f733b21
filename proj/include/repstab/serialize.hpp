#pragma once

#include <json.hpp>

#include "repstab/configspace.hpp"
#include "repstab/equivariant.hpp"
#include "repstab/induction.hpp"
#include "repstab/kuenneth.hpp"
#include "repstab/stability.hpp"

namespace repstab {

using Json = nlohmann::ordered_json;

// --- parsing (CLI argument syntax) ---
// partition: parts joined by '.', "e" or "" for the empty partition
Partition parse_partition(const std::string& s);
// decomposition: entries "lambda:mult" joined by ',', e.g. "2.1:1,1.1.1:2"
MultiplicityMap parse_multiplicity_map(const std::string& s);
// betti: comma-separated nonnegative integers
GradedBetti parse_betti(const std::string& s);

// --- decompositions ---
Json entries_to_json(const MultiplicityMap& entries);
MultiplicityMap entries_from_json(const Json& j);
Json decomposition_to_json(const IrrDecomposition& d);
Json stable_to_json(const StableDecomposition& s);
std::string entries_to_table(const MultiplicityMap& entries);
std::string entries_to_csv(const MultiplicityMap& entries);

// --- character tables ---
Json character_table_to_json(const CharacterTable& t);
// returns nullopt on version/shape mismatch (corrupt entries recomputed)
std::optional<CharacterTable> character_table_from_json(const Json& j);

// --- relation spaces ---
Json echelon_to_json(const EchelonBasis& b, int n, int q);
std::optional<EchelonBasis> echelon_from_json(const Json& j, int n, int q);

// --- stability reports ---
Json report_to_json(const StabilityReport& r);

// --- arnold ---
Json arnold_to_json(const ArnoldCohomology& c);
Json arnold_scan_to_json(const DecompositionSequence& seq);

// --- matrices / explicit representations ---
Json matrix_to_json(const MatrixQ& m);  // rationals as "p/q" strings
MatrixQ matrix_from_json(const Json& j);
ExplicitRep rep_from_json(const Json& j);
Json rep_to_json(const ExplicitRep& v);
EquivariantComplex complex_from_json(const Json& j);
Json complex_to_json(const EquivariantComplex& c);

}  // namespace repstab
