#pragma once

// JSON encodings shared by the CLI and the tests: semigroup tables,
// partitions, builder recipes and the report objects commands print.
// Serialization is deterministic (keys sorted, fixed layouts) so reports
// can be pinned byte for byte.

#include <string>

#include "json.hpp"
#include "semicat/aut.hpp"
#include "semicat/decomp.hpp"
#include "semicat/family.hpp"
#include "semicat/green.hpp"
#include "semicat/partition.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/verify.hpp"

namespace semicat {

using Json = nlohmann::json;

// {"order": k, "table": [[row major]], "names": [...], "zero": z, "identity": e}
// names, zero and identity are omitted when absent; on input they are
// cross-checked against the table and a mismatch is an InputError
Json semigroup_to_json(FiniteSemigroup const& s);
FiniteSemigroup semigroup_from_json(Json const& j);

// partitions travel as block-id arrays, ids numbered by first occurrence
Json partition_to_json(Partition const& p);
Partition partition_from_json(Json const& j);

Json orbit_report_to_json(OrbitReport const& r);
Json aut_group_to_json(AutGroup const& g);

// structural booleans, idempotents and Green's class counts; with_eggbox
// adds one entry per D-class holding its R x L grid of H-cells
Json analysis_to_json(FiniteSemigroup const& s, bool with_eggbox);

Json decomposition_to_json(FiniteSemigroup const& s, ZeroDecomposition const& d);

Json family_report_to_json(FamilyReport const& r);
Json verify_report_to_json(VerifyReport const& r);

// A recipe is {"construct": name, "args": {...}} with name one of null,
// chain, brandt, product, zero_union, semidirect, boolean_zs, example_c,
// p_semigroup.  Semigroup-valued argument slots accept a nested recipe, an
// inline semigroup object or {"builtin": name}.
FiniteSemigroup semigroup_from_recipe(Json const& recipe);

Json read_json_file(std::string const& path);  // InputError on I/O or parse trouble
void write_json_file(std::string const& path, Json const& j);
std::string dump_json(Json const& j);  // two-space indent, trailing newline

}  // namespace semicat
