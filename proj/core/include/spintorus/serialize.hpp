#pragma once

// JSON encodings. Complex numbers are [re, im]; doubles are written in the
// shortest form that parses back to the identical value.

#include <nlohmann/json.hpp>

#include "spintorus/certificates.hpp"
#include "spintorus/chain_spec.hpp"
#include "spintorus/eigenstate.hpp"
#include "spintorus/sov_basis.hpp"
#include "spintorus/spectrum.hpp"
#include "spintorus/tq_relation.hpp"

namespace spintorus {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json complex_json(Complex z);
[[nodiscard]] Complex complex_from_json(const Json& j);  // throws SpecError on a malformed value
[[nodiscard]] Json complex_list_json(std::span<const Complex> zs);

[[nodiscard]] Json spec_json(const ChainSpec& spec);
[[nodiscard]] Json state_json(const StateVector& v);
[[nodiscard]] StateVector state_from_json(const Json& j);

[[nodiscard]] Json index_json(const BasisIndex& idx);
// [{index, g_factor}] over every label.
[[nodiscard]] Json basis_table_json(const ChainSpec& spec);

[[nodiscard]] Json check_json(const CheckResult& r);
[[nodiscard]] Json record_json(const SpectralRecord& r, bool with_vector);
[[nodiscard]] Json solution_json(const TQSolution& s);
[[nodiscard]] TQSolution solution_from_json(const Json& j);
[[nodiscard]] Json bae_report_json(const BaeReport& r);
[[nodiscard]] Json homogeneous_report_json(const HomogeneousLimitReport& r);

// Pretty-printed with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace spintorus
