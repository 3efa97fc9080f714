/*
   Copyright 2026 The cremona Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON views of degree sequences, growth classes and parameter classifications.

#ifndef CREMONA_REPORT_HPP
#define CREMONA_REPORT_HPP

#include <nlohmann/json.hpp>

#include "cremona/dynamics.hpp"
#include "cremona/families.hpp"

namespace cremona {

inline nlohmann::json to_json(const GrowthClass& g) {
    nlohmann::json j{{"kind", g.kind_name()}};
    switch (g.kind) {
        case GrowthClass::Kind::Bounded: j["max"] = g.max_degree; break;
        case GrowthClass::Kind::Linear:
            j["slope"] = g.slope;
            j["intercept"] = g.intercept;
            break;
        case GrowthClass::Kind::Undetermined: j["window"] = g.window; break;
    }
    return j;
}

/// {"degrees": [...], "classification": {...}}
inline nlohmann::json to_json(const DegreeSequence& seq, const GrowthClass& g) {
    return {{"degrees", seq.degrees}, {"classification", to_json(g)}};
}

inline nlohmann::json to_json(const ParamClassification& c) {
    nlohmann::json j{{"verdict", c.verdict_name()}};
    if (c.verdict == ParamClassification::Verdict::Algebraic) {
        j["k"] = c.k;
        j["conjugator"] = c.conjugator->map.to_string();
        j["conjugator_inverse"] = c.conjugator->inverse.to_string();
    }
    if (c.verdict == ParamClassification::Verdict::SearchExhausted) j["k_max"] = c.k_max;
    return j;
}

}  // namespace cremona

#endif
