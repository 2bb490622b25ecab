#include "nfkit/unit_search.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace nfkit {

namespace {

int compute_torsion_order(const FieldElement& t) {
    FieldElement cur = t;
    FieldElement one = FieldElement::one(t.field());
    for (int k = 1; k <= 4096; ++k) {
        if (cur == one) return k;
        cur = cur * t;
    }
    throw std::domain_error("torsion generator does not have finite small order");
}

std::string key_of(const FieldElement& a) {
    std::string s;
    for (const Rat& q : a.coeffs()) {
        s += rat_to_string(q);
        s += ';';
    }
    return s;
}

bool lex_less(const FieldElement& a, const FieldElement& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// 2-adic valuation through the norm; the caller guarantees 2 is inert.
long q_valuation(const FieldElement& a) {
    long v = valuation(norm(a), Int(2));
    int n = a.field()->degree();
    if (v % n != 0) throw std::logic_error("q_valuation: norm valuation not divisible by degree");
    return v / n;
}

FieldElement two_power(const FieldPtr& F, long k) {
    Rat c(1);
    if (k >= 0)
        c = Rat(pow_int(Int(2), static_cast<unsigned long>(k)));
    else
        c = make_rat(Int(1), pow_int(Int(2), static_cast<unsigned long>(-k)));
    return FieldElement::rational(F, c);
}

}  // namespace

UnitGroupDesc::UnitGroupDesc(FieldPtr field, std::vector<FieldElement> fundamental_units,
                             bool certified_fundamental)
    : UnitGroupDesc(field, FieldElement::rational(field, Rat(-1)),
                    std::move(fundamental_units), certified_fundamental) {}

UnitGroupDesc::UnitGroupDesc(FieldPtr field, FieldElement torsion_gen,
                             std::vector<FieldElement> fundamental_units,
                             bool certified_fundamental)
    : field_(std::move(field)),
      torsion_gen_(std::move(torsion_gen)),
      units_(std::move(fundamental_units)),
      certified_(certified_fundamental) {
    if (!is_unit(torsion_gen_))
        throw std::domain_error("UnitGroupDesc: torsion generator is not a unit");
    for (const FieldElement& u : units_)
        if (!is_unit(u)) throw std::domain_error("UnitGroupDesc: generator is not a unit");
    torsion_order_ = compute_torsion_order(torsion_gen_);
    if (certified_) {
        auto [r1, r2] = signature(*field_);
        if (rank() != r1 + r2 - 1)
            throw std::domain_error(
                "UnitGroupDesc: a certified fundamental system must have r1 + r2 - 1 "
                "generators");
    }
}

std::vector<FieldElement> enumerate_units(const UnitGroupDesc& U, int B) {
    if (B < 0) throw std::domain_error("enumerate_units: negative bound");
    const FieldPtr& F = U.field();
    int rank = U.rank();
    std::vector<FieldElement> out;

    std::vector<FieldElement> gens = U.fundamental_units();
    std::vector<FieldElement> inv_gens;
    inv_gens.reserve(gens.size());
    for (const FieldElement& g : gens) inv_gens.push_back(g.inverse());

    // start at exponent vector (-B, ..., -B)
    FieldElement cur = FieldElement::one(F);
    for (const FieldElement& g : inv_gens) cur = cur * g.pow(B);

    auto emit = [&](const FieldElement& base) {
        FieldElement t = base;
        for (int s = 0; s < U.torsion_order(); ++s) {
            out.push_back(t);
            if (s + 1 < U.torsion_order()) t = t * U.torsion_gen();
        }
    };

    std::vector<int> exps(static_cast<std::size_t>(rank), -B);
    std::vector<int> dir(static_cast<std::size_t>(rank), +1);
    emit(cur);
    if (B == 0 || rank == 0) return out;
    for (;;) {
        int i = 0;
        while (i < rank) {
            int next = exps[static_cast<std::size_t>(i)] + dir[static_cast<std::size_t>(i)];
            if (next >= -B && next <= B) break;
            dir[static_cast<std::size_t>(i)] = -dir[static_cast<std::size_t>(i)];
            ++i;
        }
        if (i == rank) break;
        std::size_t iu = static_cast<std::size_t>(i);
        exps[iu] += dir[iu];
        cur = cur * (dir[iu] > 0 ? gens[iu] : inv_gens[iu]);
        emit(cur);
    }
    return out;
}

std::vector<UnitEqSolution> solve_unit_equation(const UnitGroupDesc& U, int B) {
    std::vector<FieldElement> units = enumerate_units(U, B);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(units.size() * 2);
    for (std::size_t i = 0; i < units.size(); ++i) index.emplace(key_of(units[i]), i);

    FieldElement one = FieldElement::one(U.field());
    std::vector<UnitEqSolution> sols;
    for (const FieldElement& lambda : units) {
        FieldElement mu = one - lambda;
        if (mu.is_zero()) continue;
        auto it = index.find(key_of(mu));
        if (it == index.end()) continue;
        // exact re-verification of the returned pair
        if (!((lambda + mu) == one) || !is_unit(lambda) || !is_unit(mu))
            throw std::logic_error("unit-equation candidate failed re-verification");
        sols.emplace_back(lambda, mu);
    }
    std::sort(sols.begin(), sols.end(),
              [](const UnitEqSolution& a, const UnitEqSolution& b) {
                  return lex_less(a.lambda, b.lambda);
              });
    return sols;
}

std::vector<UnitEqSolution> solve_s_unit_equation(const UnitGroupDesc& U, int B,
                                                  int k_bound) {
    if (B < 0 || k_bound < 0) throw std::domain_error("solve_s_unit_equation: negative bound");
    const FieldPtr& F = U.field();
    if (!is_inert(*F, Int(2)))
        throw std::domain_error("solve_s_unit_equation: 2 is not certified inert");
    std::vector<FieldElement> units = enumerate_units(U, B);
    FieldElement one = FieldElement::one(F);
    std::vector<UnitEqSolution> sols;
    for (const FieldElement& u : units) {
        for (long k = -k_bound; k <= k_bound; ++k) {
            FieldElement lambda = u * two_power(F, k).coeffs()[0];
            FieldElement mu = one - lambda;
            if (mu.is_zero()) continue;
            long vmu = q_valuation(mu);
            FieldElement mu_unit_part = mu * two_power(F, -vmu).coeffs()[0];
            if (!is_unit(mu_unit_part)) continue;
            if (!((lambda + mu) == one)) throw std::logic_error("s-unit candidate sum != 1");
            bool both_units = (k == 0 && vmu == 0);
            sols.emplace_back(lambda, mu,
                              both_units ? UnitEqSolution::Kind::Unit
                                         : UnitEqSolution::Kind::SUnit,
                              k, vmu);
        }
    }
    std::sort(sols.begin(), sols.end(),
              [](const UnitEqSolution& a, const UnitEqSolution& b) {
                  if (a.v_lambda != b.v_lambda) return a.v_lambda < b.v_lambda;
                  if (a.v_mu != b.v_mu) return a.v_mu < b.v_mu;
                  return lex_less(a.lambda, b.lambda);
              });
    return sols;
}

UnitEqSolution normalize_solution(const UnitEqSolution& s) {
    UnitEqSolution out = s;
    if (s.v_lambda < 0) {
        if (s.v_lambda != s.v_mu)
            throw std::domain_error(
                "normalize_solution: negative valuations must agree for lambda + mu = 1");
        FieldElement linv = s.lambda.inverse();
        out.lambda = linv;
        out.mu = -(s.mu * linv);
        out.v_lambda = -s.v_lambda;
        out.v_mu = s.v_mu - s.v_lambda;  // = 0
    } else if (s.v_lambda == 0 && s.v_mu > 0) {
        std::swap(out.lambda, out.mu);
        std::swap(out.v_lambda, out.v_mu);
    }
    out.n_value = std::max(std::labs(out.v_lambda), std::labs(out.v_mu));
    if (out.n_value != s.n_value)
        throw std::logic_error("normalize_solution changed n_value");
    if (!((out.lambda + out.mu) == FieldElement::one(s.lambda.field())))
        throw std::logic_error("normalize_solution broke lambda + mu = 1");
    return out;
}

UnitEqSolution descent_step(const UnitEqSolution& s, const FieldElement& delta) {
    if (!is_unit(delta)) throw std::domain_error("descent_step: delta is not a unit");
    if (!(delta * delta == s.mu)) throw std::domain_error("descent_step: delta^2 != mu");
    if (s.v_mu != 0 || s.v_lambda < 2)
        throw std::domain_error("descent_step: requires a normalized solution with n >= 2");
    long n = s.v_lambda;
    const FieldPtr& F = s.lambda.field();
    if (!is_inert(*F, Int(2)))
        throw std::domain_error("descent_step: 2 is not certified inert");
    FieldElement one = FieldElement::one(F);
    if (!((s.lambda + s.mu) == one))
        throw std::domain_error("descent_step: input does not satisfy lambda + mu = 1");

    FieldElement d = delta;
    FieldElement l1 = one + d, l2 = one - d;
    long v1 = q_valuation(l1);
    if (v1 != n - 1) {
        d = -d;
        std::swap(l1, l2);
        v1 = q_valuation(l1);
    }
    long v2 = q_valuation(l2);
    if (v1 + v2 != n)
        throw std::logic_error("descent_step: valuations of 1 +- delta do not split n");

    FieldElement quarter_dinv = d.inverse() * make_rat(Int(1), Int(4));
    UnitEqSolution out(l1 * l1 * quarter_dinv, -(l2 * l2 * quarter_dinv),
                       UnitEqSolution::Kind::SUnit, 2 * v1 - 2, 2 * v2 - 2);
    if (!((out.lambda + out.mu) == one))
        throw std::logic_error("descent_step: lambda' + mu' != 1");
    if (out.n_value != 2 * n - 4)
        throw std::logic_error("descent_step: n_value mismatch");
    return out;
}

std::optional<FieldElement> find_square_root_unit(const UnitGroupDesc& U, int B,
                                                  const FieldElement& mu) {
    if (!is_unit(mu)) throw std::domain_error("find_square_root_unit: mu is not a unit");
    if (norm(mu) == -1) return std::nullopt;  // squares have norm +1
    for (const FieldElement& d : enumerate_units(U, B))
        if (d * d == mu) return d;
    return std::nullopt;
}

FsConditionResult check_fs_conditions(const UnitEqSolution& s) {
    FsConditionResult r;
    r.n_value = s.n_value;
    r.ord_product = s.v_lambda + s.v_mu;
    r.n_at_most_4 = s.n_value <= 4;
    r.ord_product_1_mod_3 = ((r.ord_product % 3) + 3) % 3 == 1;
    r.ok = r.n_at_most_4 && r.ord_product_1_mod_3;
    std::ostringstream os;
    if (!r.n_at_most_4) os << "n = " << r.n_value << " exceeds 4";
    if (!r.ord_product_1_mod_3) {
        if (!os.str().empty()) os << "; ";
        os << "ord_q(lambda mu) = " << r.ord_product << " is not 1 mod 3";
    }
    if (r.ok) os << "both conditions hold";
    r.detail = os.str();
    return r;
}

bool classify_valuation_pair(long v_lambda, long v_mu) {
    if (std::min(v_lambda, v_mu) < 0 && v_lambda != v_mu)
        throw std::domain_error(
            "classify_valuation_pair: negative valuations must agree for lambda + mu = 1");
    static const std::pair<long, long> allowed[] = {{-4, -4}, {-1, -1}, {1, 0},
                                                    {0, 1},   {4, 0},   {0, 4}};
    for (const auto& p : allowed)
        if (p.first == v_lambda && p.second == v_mu) return true;
    return false;
}

UnitCongruenceResult unit_congruence_check(const UnitGroupDesc& U, const Int& p,
                                           const Int& h_F) {
    UnitCongruenceResult res;
    res.r = gcd_int(2 * h_F, p - 1);
    SplittingReport rep = splitting_type(*U.field(), p);
    if (!rep.certified) {
        res.status = UnitCongruenceResult::Status::Uncertified;
        return res;
    }
    if (!rep.totally_ramified(U.field()->degree())) {
        res.status = UnitCongruenceResult::Status::NotTotallyRamified;
        return res;
    }
    res.status = UnitCongruenceResult::Status::Certified;
    res.holds = true;
    auto check_gen = [&](const FieldElement& g, const std::string& label) {
        Int a = residue_tot_ramified(g, p);
        Int e = powmod(a, res.r, p);
        res.witnesses.push_back({label, a, e});
        if (e != 1) res.holds = false;
    };
    check_gen(U.torsion_gen(), "torsion");
    for (int i = 0; i < U.rank(); ++i)
        check_gen(U.fundamental_units()[static_cast<std::size_t>(i)],
                  "u" + std::to_string(i + 1));
    return res;
}

}  // namespace nfkit
