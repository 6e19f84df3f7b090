#include "cubic/symbols.hpp"

#include <algorithm>

namespace cubic::symbols {

namespace {

void require_odd_prime(int ell) {
    if (ell == 2 || !tower::is_prime(ell)) {
        throw unsupported_error("symbol calculus requires an odd prime modulus, got " +
                                std::to_string(ell));
    }
}

int normalize_coeff(long long c, int ell) {
    long long r = c % ell;
    if (r < 0) r += ell;
    return static_cast<int>(r);
}

}  // namespace

CohomologyClass::CohomologyClass(int ell, std::vector<std::string> tower_gens,
                                 std::size_t base_gens, std::vector<std::string> tokens,
                                 int degree)
    : ell_(ell),
      tower_gens_(std::move(tower_gens)),
      base_gens_(base_gens),
      tokens_(std::move(tokens)),
      degree_(degree) {
    require_odd_prime(ell_);
    if (base_gens_ > tower_gens_.size()) throw shape_error("base generator count exceeds basis");
    if (degree_ < 0) throw shape_error("negative degree");
    if (!std::is_sorted(tokens_.begin(), tokens_.end())) {
        std::sort(tokens_.begin(), tokens_.end());
    }
    if (std::adjacent_find(tokens_.begin(), tokens_.end()) != tokens_.end()) {
        throw shape_error("duplicate geometric token");
    }
}

CohomologyClass CohomologyClass::zero(int ell, std::vector<std::string> tower_gens,
                                      std::size_t base_gens, int degree) {
    return CohomologyClass(ell, std::move(tower_gens), base_gens, {}, degree);
}

void CohomologyClass::add_term(const std::vector<int>& monomial, int coefficient) {
    if (static_cast<int>(monomial.size()) != degree_) {
        throw shape_error("monomial length differs from class degree");
    }
    for (std::size_t i = 0; i < monomial.size(); ++i) {
        if (monomial[i] < 0 || monomial[i] >= static_cast<int>(generator_count())) {
            throw shape_error("generator index out of range");
        }
        if (i > 0 && monomial[i - 1] >= monomial[i]) {
            throw shape_error("monomial indices must be strictly increasing");
        }
    }
    int c = normalize_coeff(coefficient, ell_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, c);
    if (!inserted) {
        it->second = normalize_coeff(it->second + c, ell_);
        if (it->second == 0) terms_.erase(it);
    }
}

std::string CohomologyClass::generator_name(int index) const {
    if (index < static_cast<int>(tower_gens_.size())) return tower_gens_[index];
    return tokens_[index - tower_gens_.size()];
}

std::string CohomologyClass::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += std::to_string(coeff) + "*(";
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i) out += "^";
            out += generator_name(mono[i]);
        }
        out += ")";
    }
    return out;
}

CohomologyClass symbol(const tower::TowerField& field, int ell,
                       const std::vector<tower::ClassVector>& classes,
                       const std::vector<GeometricToken>& tokens) {
    require_odd_prime(ell);
    std::size_t dim = tower::class_dim(field, ell);
    for (const auto& cv : classes) {
        if (cv.ell != ell || cv.coords.size() != dim) {
            throw shape_error("class vector with mixed modulus or dimension");
        }
    }
    std::vector<std::string> gen_names = tower::class_generator_names(field, ell);
    std::vector<std::string> token_labels;
    token_labels.reserve(tokens.size());
    for (const auto& t : tokens) token_labels.push_back(t.label);
    std::sort(token_labels.begin(), token_labels.end());

    std::size_t base_gens = tower::base_class_dim(field.base, ell);
    CohomologyClass acc(ell, gen_names, base_gens, token_labels, 0);
    acc.add_term({}, 1);

    auto degree_one = [&](const std::vector<int>& coords) {
        CohomologyClass c(ell, gen_names, base_gens, token_labels, 1);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] != 0) c.add_term({static_cast<int>(i)}, coords[i]);
        }
        return c;
    };

    for (const auto& cv : classes) {
        acc = cup(acc, degree_one(cv.coords));
    }
    for (std::size_t t = 0; t < token_labels.size(); ++t) {
        CohomologyClass c(ell, gen_names, base_gens, token_labels, 1);
        c.add_term({static_cast<int>(dim + t)}, 1);
        acc = cup(acc, c);
    }
    return acc;
}

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.ell() != b.ell() || a.tower_gens() != b.tower_gens() ||
        a.base_gens() != b.base_gens() || a.tokens() != b.tokens()) {
        throw shape_error("cup product of classes over different generator sets");
    }
    CohomologyClass out(a.ell(), a.tower_gens(), a.base_gens(), a.tokens(),
                        a.degree() + b.degree());
    std::vector<int> merged;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Merge the two increasing tuples, tracking the permutation sign;
            // a repeated generator kills the term.
            merged.clear();
            merged.reserve(ma.size() + mb.size());
            std::size_t i = 0, j = 0;
            int inversions = 0;
            bool repeat = false;
            while (i < ma.size() && j < mb.size()) {
                if (ma[i] == mb[j]) {
                    repeat = true;
                    break;
                }
                if (ma[i] < mb[j]) {
                    merged.push_back(ma[i++]);
                } else {
                    // mb[j] jumps over the remaining entries of ma.
                    inversions += static_cast<int>(ma.size() - i);
                    merged.push_back(mb[j++]);
                }
            }
            if (repeat) continue;
            while (i < ma.size()) merged.push_back(ma[i++]);
            while (j < mb.size()) merged.push_back(mb[j++]);
            int coeff = ca * cb;
            if (inversions % 2 != 0) coeff = -coeff;
            out.add_term(merged, coeff);
        }
    }
    return out;
}

namespace {

// Index of `variable` as a generator, requiring it to be the outermost tower
// variable of the class's ambient field.
int outermost_variable_index(const CohomologyClass& a, const std::string& variable) {
    const auto& gens = a.tower_gens();
    if (gens.size() == a.base_gens()) {
        throw precondition_error("class lives over a tower with no variables");
    }
    if (gens.back() != variable) {
        throw precondition_error("residue/specialization requires the outermost variable (" +
                                 gens.back() + "), got " + variable);
    }
    return static_cast<int>(gens.size()) - 1;
}

std::vector<std::string> without_back(const std::vector<std::string>& v) {
    return std::vector<std::string>(v.begin(), v.end() - 1);
}

}  // namespace

CohomologyClass residue(const CohomologyClass& a, const std::string& variable) {
    int g = outermost_variable_index(a, variable);
    CohomologyClass out(a.ell(), without_back(a.tower_gens()), a.base_gens(), a.tokens(),
                        a.degree() - 1);
    std::vector<int> reduced;
    for (const auto& [mono, coeff] : a.terms()) {
        auto it = std::find(mono.begin(), mono.end(), g);
        if (it == mono.end()) continue;
        int after = static_cast<int>(mono.end() - it) - 1;
        reduced.clear();
        for (int idx : mono) {
            if (idx == g) continue;
            reduced.push_back(idx > g ? idx - 1 : idx);
        }
        out.add_term(reduced, after % 2 == 0 ? coeff : -coeff);
    }
    return out;
}

CohomologyClass specialize(const CohomologyClass& a, const std::string& variable) {
    int g = outermost_variable_index(a, variable);
    CohomologyClass out(a.ell(), without_back(a.tower_gens()), a.base_gens(), a.tokens(),
                        a.degree());
    std::vector<int> reduced;
    for (const auto& [mono, coeff] : a.terms()) {
        if (std::find(mono.begin(), mono.end(), g) != mono.end()) continue;
        reduced.clear();
        for (int idx : mono) reduced.push_back(idx > g ? idx - 1 : idx);
        out.add_term(reduced, coeff);
    }
    return out;
}

CohomologyClass lift(const CohomologyClass& a, const std::string& variable) {
    if (std::find(a.tower_gens().begin(), a.tower_gens().end(), variable) !=
        a.tower_gens().end()) {
        throw shape_error("lift target variable already present: " + variable);
    }
    std::vector<std::string> gens = a.tower_gens();
    gens.push_back(variable);
    int g = static_cast<int>(gens.size()) - 1;
    CohomologyClass out(a.ell(), std::move(gens), a.base_gens(), a.tokens(), a.degree());
    std::vector<int> shifted;
    for (const auto& [mono, coeff] : a.terms()) {
        shifted.clear();
        for (int idx : mono) shifted.push_back(idx >= g ? idx + 1 : idx);
        out.add_term(shifted, coeff);
    }
    return out;
}

bool is_zero(const CohomologyClass& a) { return a.is_zero(); }

std::vector<std::string> nonvanishing_witness(const CohomologyClass& a) {
    std::vector<std::string> out;
    for (const auto& [mono, coeff] : a.terms()) {
        (void)coeff;
        std::string s;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i) s += "^";
            s += a.generator_name(mono[i]);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace cubic::symbols
