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

/**
 * @file dynamics.hpp
 * @brief Degree sequences of iterates and what they say about algebraicity.
 *
 * An element of Bir(P^n) is algebraic iff deg(f^m) stays bounded. Only a finite prefix of the
 * sequence can be computed, so every verdict here is evidence about a horizon M, never a proof.
 */

#ifndef CREMONA_DYNAMICS_HPP
#define CREMONA_DYNAMICS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

inline constexpr int kDefaultHorizon = 16;
inline constexpr int kDefaultWindow = 5;

/// degrees[m-1] = deg(f^m) for m = 1..M.
struct DegreeSequence {
    RationalMap map;
    std::vector<int> degrees;
};

struct GrowthClass {
    enum class Kind { Bounded, Linear, Undetermined };

    Kind kind = Kind::Undetermined;
    int max_degree = 0;  // Bounded
    long slope = 0;      // Linear: deg(f^m) = slope * m + intercept on the trailing window
    long intercept = 0;
    int window = 0;      // Undetermined

    static GrowthClass bounded(int max) { return {Kind::Bounded, max, 0, 0, 0}; }
    static GrowthClass linear(long slope, long intercept) { return {Kind::Linear, 0, slope, intercept, 0}; }
    static GrowthClass undetermined(int window) { return {Kind::Undetermined, 0, 0, 0, window}; }

    bool operator==(const GrowthClass&) const = default;

    std::string kind_name() const {
        switch (kind) {
            case Kind::Bounded: return "bounded";
            case Kind::Linear: return "linear";
            case Kind::Undetermined: break;
        }
        return "undetermined";
    }
};

/// deg f, deg f^2, ..., deg f^M by incremental composition f^m = f o f^(m-1).
inline DegreeSequence degree_sequence(const RationalMap& f, int horizon) {
    if (horizon < 1) throw ContractViolation("degree sequence horizon must be >= 1");
    DegreeSequence seq{f, {f.degree()}};
    seq.degrees.reserve(static_cast<std::size_t>(horizon));
    RationalMap iterate = f;
    for (int m = 2; m <= horizon; ++m) {
        iterate = compose(f, iterate);
        seq.degrees.push_back(iterate.degree());
    }
    return seq;
}

/// Bounded when the last `window` degrees agree. Otherwise Linear when the last `window` first
/// differences (fewer if the sequence is shorter) agree and are positive. Anything else,
/// including a plateau followed by growth, is Undetermined.
inline GrowthClass classify_growth(const std::vector<int>& degrees, int window) {
    if (window < 2) throw ContractViolation("growth window must be >= 2");
    if (degrees.size() < static_cast<std::size_t>(window)) throw ContractViolation("growth window larger than the sequence");
    const auto w = static_cast<std::size_t>(window);
    const auto tail = degrees.end() - static_cast<std::ptrdiff_t>(w);
    if (std::all_of(tail, degrees.end(), [&](int d) { return d == degrees.back(); }))
        return GrowthClass::bounded(degrees.back());

    const std::size_t ndiff = std::min(w, degrees.size() - 1);
    const long step = degrees.back() - degrees[degrees.size() - 2];
    bool linear = step > 0;
    for (std::size_t i = degrees.size() - ndiff; linear && i < degrees.size(); ++i)
        linear = degrees[i] - degrees[i - 1] == step;
    if (linear) {
        const long m = static_cast<long>(degrees.size());
        return GrowthClass::linear(step, degrees.back() - step * m);
    }
    return GrowthClass::undetermined(window);
}

inline GrowthClass classify_growth(const DegreeSequence& seq, int window) { return classify_growth(seq.degrees, window); }

/// Membership in Bir_{k,d}: deg(f^k) <= d.
inline bool in_bir_k_d(const RationalMap& f, int k, int d) { return power(f, k).degree() <= d; }

/// deg(f^i) <= d for i = 1..M. One-sided: true is evidence for Bir_{inf,d}, not proof.
inline bool in_bir_inf_d_truncated(const RationalMap& f, int d, int horizon) {
    if (horizon < 1) throw ContractViolation("horizon must be >= 1");
    RationalMap iterate = f;
    for (int m = 1; m <= horizon; ++m) {
        if (m > 1) iterate = compose(f, iterate);
        if (iterate.degree() > d) return false;
    }
    return true;
}

struct AlgebraicityVerdict {
    enum class Kind { AlgebraicEvidence, NotAlgebraicEvidence, Inconclusive };

    Kind kind;
    GrowthClass growth;
    DegreeSequence sequence;

    std::string kind_name() const {
        switch (kind) {
            case Kind::AlgebraicEvidence: return "AlgebraicEvidence";
            case Kind::NotAlgebraicEvidence: return "NotAlgebraicEvidence";
            case Kind::Inconclusive: break;
        }
        return "Inconclusive";
    }
};

inline AlgebraicityVerdict is_algebraic_heuristic(const RationalMap& f, int horizon = kDefaultHorizon,
                                                  int window = kDefaultWindow) {
    if (window < 2 || horizon < window) throw ContractViolation("need horizon >= window >= 2");
    DegreeSequence seq = degree_sequence(f, horizon);
    GrowthClass growth = classify_growth(seq, window);
    auto kind = AlgebraicityVerdict::Kind::Inconclusive;
    if (growth.kind == GrowthClass::Kind::Bounded) kind = AlgebraicityVerdict::Kind::AlgebraicEvidence;
    if (growth.kind == GrowthClass::Kind::Linear) kind = AlgebraicityVerdict::Kind::NotAlgebraicEvidence;
    return {kind, growth, std::move(seq)};
}

}  // namespace cremona

#endif
