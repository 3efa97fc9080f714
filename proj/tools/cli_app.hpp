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

// The `cremona` command-line front end. Kept in a header so the tests can drive it in-process.

#ifndef CREMONA_TOOLS_CLI_APP_HPP
#define CREMONA_TOOLS_CLI_APP_HPP

#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cremona/cremona.hpp"

namespace cremona::cli {

enum ExitCode { kOk = 0, kComputationFailure = 1, kBadSyntax = 2 };

struct RunConfig {
    std::string field = "Q";
    int horizon = kDefaultHorizon;
    int window = kDefaultWindow;
    long k_max = kDefaultKMax;
    std::string format = "json";
    bool format_given = false;
    std::vector<std::string> maps;
    std::vector<std::string> affine;
    std::vector<std::string> families;
    std::string inverse;
    std::string point;
    int exponent = 1;
};

namespace detail {

struct Subject {
    RationalMap map;
    std::optional<FamilyParam> family;
    std::string label;
};

class App {
   public:
    App(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out), spec_(field(cfg.field)) {
        if (cfg.window < 2 || cfg.horizon < cfg.window) throw ParseError("need -M >= --window >= 2", 0);
        if (cfg.k_max < 1) throw ParseError("--kmax must be >= 1", 0);
        if (cfg.format != "json" && cfg.format != "csv") throw ParseError("--format must be json or csv", 0);
    }

    int degrees() {
        Subject s = subject();
        DegreeSequence seq = degree_sequence(s.map, cfg_.horizon);
        GrowthClass g = classify_growth(seq, cfg_.window);
        if (csv()) {
            out_ << csv_header() << "\n" << csv_row(s.label, seq, g, verdict_of(g)) << "\n";
            return kOk;
        }
        nlohmann::json j = to_json(seq, g);
        j["input"] = input("degrees", s);
        j["verdict"] = verdict_of(g);
        emit(j);
        return kOk;
    }

    int classify() {
        Subject s = subject();
        DegreeSequence seq = degree_sequence(s.map, cfg_.horizon);
        GrowthClass g = classify_growth(seq, cfg_.window);
        nlohmann::json j = to_json(seq, g);
        j["input"] = input("classify", s);
        if (s.family) {
            ParamClassification c = family_classify(*s.family, cfg_.k_max);
            j.update(to_json(c));
        } else {
            j["verdict"] = verdict_of(g);
        }
        if (csv()) {
            out_ << "input,verdict,k\n" << quote(s.label) << "," << j["verdict"].get<std::string>() << ","
                 << (j.contains("k") ? j["k"].dump() : "") << "\n";
            return kOk;
        }
        emit(j);
        return kOk;
    }

    int verify_conjugacy() {
        if (cfg_.families.size() != 1) throw ParseError("verify-conjugacy needs exactly one --family", 0);
        const FamilyParam p = parse_family(cfg_.families.front(), spec_);
        const bool unipotent = std::holds_alternative<UnipotentParam>(p);
        const std::string normal = unipotent ? "rho(0)" : "rho(1,xi)";
        ParamClassification c = family_classify(p, cfg_.k_max);
        std::string line;
        int code = kOk;
        switch (c.verdict) {
            case ParamClassification::Verdict::Algebraic: {
                const RationalMap target = unipotent ? unipotent_normal_form(spec_, std::get<UnipotentParam>(p).n)
                                                     : semisimple_normal_form(std::get<SemisimpleParam>(p).xi,
                                                                              std::get<SemisimpleParam>(p).n);
                const bool ok = eq_up_to_scalar(conjugate(c.conjugator->map, c.conjugator->inverse, family_map(p)), target);
                line = ok ? "OK: conjugate to " + normal : "FAIL: witness does not conjugate to " + normal;
                code = ok ? kOk : kComputationFailure;
                break;
            }
            case ParamClassification::Verdict::NotAlgebraic:
                line = "NO: not algebraic, not conjugate to " + normal;
                code = kComputationFailure;
                break;
            case ParamClassification::Verdict::SearchExhausted:
                line = "UNKNOWN: search exhausted at |k| <= " + std::to_string(cfg_.k_max);
                code = kComputationFailure;
                break;
        }
        if (json_requested()) {
            nlohmann::json j = to_json(c);
            j["input"] = input("verify-conjugacy", {family_map(p), p, to_string(p)});
            j["result"] = line;
            emit(j);
        } else {
            out_ << line << "\n";
        }
        return code;
    }

    int verify_inverse() {
        Subject s = subject();
        RationalMap inv = [&] {
            if (!cfg_.inverse.empty()) return parse_map(cfg_.inverse, spec_);
            if (s.family) return family_inverse(*s.family);
            throw ParseError("verify-inverse needs --inverse or a --family", 0);
        }();
        const bool ok = cremona::verify_inverse(s.map, inv);
        const long bound = ipow(s.map.degree(), static_cast<int>(s.map.n()) - 1);
        const bool within = inv.degree() <= bound;
        const std::string line = ok ? "OK: inverse verified" : "FAIL: not an inverse pair";
        if (json_requested()) {
            nlohmann::json j{{"input", input("verify-inverse", s)}, {"result", line}, {"inverse", inv.to_string()},
                             {"inverse_degree", inv.degree()}, {"degree_bound", bound}, {"within_bound", within}};
            emit(j);
        } else {
            out_ << line << "\n";
        }
        return ok ? kOk : kComputationFailure;
    }

    int compose() {
        std::vector<RationalMap> maps;
        for (const auto& m : cfg_.maps) maps.push_back(parse_map(m, spec_));
        for (const auto& a : cfg_.affine) maps.push_back(homogenize_affine(parse_affine_map(a, spec_)));
        for (const auto& f : cfg_.families) maps.push_back(family_map(parse_family(f, spec_)));
        if (maps.size() < 2) throw ParseError("compose needs at least two maps", 0);
        RationalMap r = maps.back();
        for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) r = cremona::compose(*it, r);
        nlohmann::json in = base_input("compose");
        in["maps"] = cfg_.maps;
        if (!cfg_.affine.empty()) in["affine"] = cfg_.affine;
        if (!cfg_.families.empty()) in["families"] = cfg_.families;
        emit_map(in, r);
        return kOk;
    }

    int power() {
        Subject s = subject();
        RationalMap r = cremona::power(s.map, cfg_.exponent);
        nlohmann::json in = input("power", s);
        in["exponent"] = cfg_.exponent;
        emit_map(in, r);
        return kOk;
    }

    int embed_wd() {
        const std::string& text = cfg_.point;
        if (text.size() < 2 || text[1] != ':' || (text[0] != 'u' && text[0] != 's'))
            throw ParseError("--point must start with 'u:' or 's:'", 0);
        std::optional<std::size_t> n;
        std::optional<Scalar> mu, eta, lambda;
        for (const auto& [key, value] : cremona::detail::key_values(std::string_view(text).substr(2), 2)) {
            if (key == "n") n = cremona::detail::parse_dimension(value);
            else if (key == "mu") mu = Scalar::parse(value, spec_);
            else if (key == "lambda") lambda = Scalar::parse(value, spec_);
            else if (key == "eta" && text[0] == 's') eta = Scalar::parse(value, spec_);
            else throw ParseError("unknown point key '" + key + "'", 2);
        }
        if (!n || !mu || !lambda || (text[0] == 's' && !eta)) throw ParseError("incomplete --point", 0);
        const bool unipotent = text[0] == 'u';
        WdPoint w = unipotent ? unipotent_wd_embedding(*n, *mu, *lambda) : semisimple_wd_embedding(*n, *mu, *eta, *lambda);
        nlohmann::json j{{"input", base_input("embed-wd")}, {"wd_point", w.to_string()}, {"wd_degree", w.degree()}};
        j["input"]["point"] = text;
        if (w.obviously_not_birational()) {
            j["verdict"] = "not-birational";
        } else {
            RationalMap f = project_map(w);
            const bool birational_by_family = unipotent ? !mu->is_zero() : !(mu->is_zero() || lambda->is_zero());
            if (birational_by_family) {
                FamilyParam p = unipotent ? FamilyParam{UnipotentParam{*n, *lambda / *mu}}
                                          : FamilyParam{SemisimpleParam{*n, *eta / *mu, *lambda / *mu}};
                j["family"] = to_string(p);
                j["inverse_verified"] = cremona::verify_inverse(f, family_inverse(p));
            }
            j["verdict"] = "birational";
            j["map"] = f.to_string();
            j["degree"] = f.degree();
        }
        emit(j);
        return kOk;
    }

    int sweep() {
        std::vector<Subject> subjects;
        for (const auto& f : cfg_.families) {
            FamilyParam p = parse_family(f, spec_);
            subjects.push_back({family_map(p), p, to_string(p)});
        }
        for (const auto& m : cfg_.maps) {
            RationalMap f = parse_map(m, spec_);
            subjects.push_back({f, std::nullopt, f.to_string()});
        }
        if (subjects.empty()) throw ParseError("sweep needs at least one --family or --map", 0);

        struct Row {
            DegreeSequence seq;
            GrowthClass growth;
            std::optional<ParamClassification> classification;
        };
        std::vector<std::future<Row>> jobs;
        for (const auto& s : subjects) {
            jobs.push_back(std::async(std::launch::async, [this, s] {
                DegreeSequence seq = degree_sequence(s.map, cfg_.horizon);
                GrowthClass g = classify_growth(seq, cfg_.window);
                std::optional<ParamClassification> c;
                if (s.family) c = family_classify(*s.family, cfg_.k_max);
                return Row{std::move(seq), g, std::move(c)};
            }));
        }
        if (csv()) out_ << csv_header() << "\n";
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            Row row = jobs[i].get();
            const std::string verdict = row.classification ? row.classification->verdict_name() : verdict_of(row.growth);
            if (csv()) {
                out_ << csv_row(subjects[i].label, row.seq, row.growth, verdict) << "\n";
                continue;
            }
            nlohmann::json e = to_json(row.seq, row.growth);
            e["input"] = subjects[i].label;
            if (row.classification) e.update(to_json(*row.classification));
            else e["verdict"] = verdict;
            entries.push_back(std::move(e));
        }
        if (!csv()) {
            nlohmann::json in = base_input("sweep");
            in["families"] = cfg_.families;
            in["maps"] = cfg_.maps;
            emit({{"input", in}, {"entries", entries}});
        }
        return kOk;
    }

   private:
    // A composite modulus is a bad option value, not a failed computation.
    static FieldSpec field(const std::string& text) {
        try {
            return FieldSpec::parse(text);
        } catch (const ContractViolation& e) {
            throw ParseError(std::string("--field: ") + e.what(), 0);
        }
    }

    bool csv() const { return cfg_.format == "csv"; }
    bool json_requested() const { return cfg_.format_given && cfg_.format == "json"; }

    Subject subject() const {
        const std::size_t given = cfg_.families.size() + cfg_.maps.size() + cfg_.affine.size();
        if (given != 1) throw ParseError("give exactly one of --family, --map, --affine", 0);
        if (!cfg_.families.empty()) {
            FamilyParam p = parse_family(cfg_.families.front(), spec_);
            return {family_map(p), p, to_string(p)};
        }
        if (!cfg_.maps.empty()) return {parse_map(cfg_.maps.front(), spec_), std::nullopt, cfg_.maps.front()};
        return {homogenize_affine(parse_affine_map(cfg_.affine.front(), spec_)), std::nullopt, cfg_.affine.front()};
    }

    nlohmann::json base_input(const std::string& command) const {
        return {{"command", command}, {"field", spec_.to_string()}, {"M", cfg_.horizon}, {"window", cfg_.window}};
    }

    nlohmann::json input(const std::string& command, const Subject& s) const {
        nlohmann::json j = base_input(command);
        if (s.family) j["family"] = s.label;
        else j["map"] = s.map.to_string();
        if (s.family && command == "classify") j["kmax"] = cfg_.k_max;
        return j;
    }

    static std::string verdict_of(const GrowthClass& g) {
        switch (g.kind) {
            case GrowthClass::Kind::Bounded: return "AlgebraicEvidence";
            case GrowthClass::Kind::Linear: return "NotAlgebraicEvidence";
            case GrowthClass::Kind::Undetermined: break;
        }
        return "Inconclusive";
    }

    std::string csv_header() const {
        std::string h = "input";
        for (int m = 1; m <= cfg_.horizon; ++m) h += ",m=" + std::to_string(m);
        return h + ",kind,max,slope,intercept,verdict";
    }

    static std::string csv_row(const std::string& label, const DegreeSequence& seq, const GrowthClass& g,
                               const std::string& verdict) {
        std::string row = quote(label);
        for (int d : seq.degrees) row += "," + std::to_string(d);
        row += "," + g.kind_name() + ",";
        if (g.kind == GrowthClass::Kind::Bounded) row += std::to_string(g.max_degree);
        row += ",";
        if (g.kind == GrowthClass::Kind::Linear) row += std::to_string(g.slope) + "," + std::to_string(g.intercept);
        else row += ",";
        return row + "," + verdict;
    }

    static std::string quote(const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    static long ipow(long b, int e) {
        long r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    }

    void emit_map(nlohmann::json in, const RationalMap& r) {
        nlohmann::json j{{"input", std::move(in)}, {"map", r.to_string()}, {"degree", r.degree()}};
        if (!r.components().front().is_zero()) j["affine"] = affine_restriction(r).to_string();
        emit(j);
    }

    void emit(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

    const RunConfig& cfg_;
    std::ostream& out_;
    FieldSpec spec_;
};

inline void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--field", cfg.field, "Coefficient field: Q or Fp=<p>")->capture_default_str();
    sub->add_option("-M", cfg.horizon, "Iteration horizon")->capture_default_str();
    sub->add_option("--window", cfg.window, "Trailing window for growth classification")->capture_default_str();
    sub->add_option("--kmax", cfg.k_max, "Search bound for k in a = xi^k")->capture_default_str();
    sub->add_option_function<std::string>("--format", [&cfg](const std::string& f) {
        cfg.format = f;
        cfg.format_given = true;
    }, "Output format: json or csv");
    sub->add_option("--map", cfg.maps, "Homogeneous map \"h0; h1; ...; hn\"");
    sub->add_option("--affine", cfg.affine, "Affine map \"num/den, ...\" in x1..xn");
    sub->add_option("--family", cfg.families, "u:n=<n>,t=<scalar> or s:n=<n>,a=<scalar>,xi=<scalar>");
}

}  // namespace detail

/// Runs one invocation. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree growth and algebraicity of birational maps of P^n"};
    app.require_subcommand(1);
    RunConfig cfg;
    struct Command {
        CLI::App* sub;
        int (detail::App::*run)();
    };
    std::vector<Command> commands;
    auto add = [&](const char* name, const char* help, int (detail::App::*fn)()) {
        CLI::App* sub = app.add_subcommand(name, help);
        detail::add_common(sub, cfg);
        commands.push_back({sub, fn});
        return sub;
    };
    add("degrees", "Degree sequence deg(f^m), m = 1..M, with growth classification", &detail::App::degrees);
    add("classify", "Algebraicity verdict (exact for family parameters)", &detail::App::classify);
    add("verify-conjugacy", "Check the conjugator of a family map to its normal form", &detail::App::verify_conjugacy);
    add("verify-inverse", "Check that two maps are mutually inverse", &detail::App::verify_inverse)
        ->add_option("--inverse", cfg.inverse, "Candidate inverse (homogeneous map text)");
    add("compose", "Compose maps left to right: f1 o f2 o ...", &detail::App::compose);
    add("power", "m-th iterate of a map", &detail::App::power)
        ->add_option("-e,--exponent", cfg.exponent, "Iterate exponent m >= 1")
        ->capture_default_str();
    add("embed-wd", "W_2 embedding point of a family and its birationality", &detail::App::embed_wd)
        ->add_option("--point", cfg.point, "u:n=<n>,mu=<s>,lambda=<s> or s:n=<n>,mu=<s>,eta=<s>,lambda=<s>")
        ->required();
    add("sweep", "Degree sequences for many inputs (JSON or CSV)", &detail::App::sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadSyntax;
    }

    try {
        for (const auto& c : commands) {
            if (!c.sub->parsed()) continue;
            detail::App runner(cfg, out);
            return (runner.*c.run)();
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadSyntax;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kComputationFailure;
    }
    return kBadSyntax;
}

}  // namespace cremona::cli

#endif
