/*
 * Copyright 2026 The monopath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MONOPATH_CERTIFICATE_HPP
#define MONOPATH_CERTIFICATE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monopath/duo.hpp"
#include "monopath/kernels.hpp"
#include "monopath/model.hpp"
#include "monopath/ramsey.hpp"

namespace monopath {

/// "sha256:<hex>" of the given bytes.
std::string input_digest(std::string_view bytes);

// Certificate builders. Every certificate carries "type" and "input_digest".
nlohmann::json duo_certificate(const Duo& d, const std::string& digest);
nlohmann::json embedding_certificate(const Embedding& e, const std::string& digest);
nlohmann::json absorbing_certificate(const std::vector<Vertex>& s, const std::string& digest);
nlohmann::json quasi_kernel_certificate(const std::vector<Vertex>& k, const std::string& digest);
nlohmann::json partition_duo_certificate(const PartitionDuo& p, const std::string& digest);
/// Failure witness of ramsey_check on graph g.
nlohmann::json ramsey_witness_certificate(const SimpleGraph& g, Colour k, const SimpleGraph& motif,
                                          const EdgeColouring& colouring, const std::string& digest);
/// Failure witness of the quasi-monochromatic triangle check on a pattern.
nlohmann::json triangle_witness_certificate(const PatternTournament& p, Colour k,
                                            const EdgeColouring& colouring, const std::string& digest);

struct Verification {
  bool ok;
  std::string reason;
};

/// Re-checks a certificate against the instance text it was issued for.
///
/// Uses only model accessors and the reach primitives; no search code. A
/// digest mismatch fails verification. Malformed instances or certificates
/// throw (ParseError, nlohmann::json exceptions).
Verification verify_certificate(std::string_view instance_text, const nlohmann::json& cert);

}  // namespace monopath

#endif  // MONOPATH_CERTIFICATE_HPP
