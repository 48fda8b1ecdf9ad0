#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "schsym/counting.hpp"
#include "schsym/determining.hpp"
#include "schsym/diffop.hpp"
#include "schsym/exppoly.hpp"
#include "schsym/poly.hpp"
#include "schsym/rational.hpp"
#include "schsym/spectral.hpp"
#include "schsym/symtensor.hpp"
#include "schsym/upoly.hpp"

namespace schsym {

using Json = nlohmann::ordered_json;

/// Embedded in every report; the 1/2 multiplies V as well.
inline constexpr const char* kConvention = "L = i*dt - 1/2*((p-e*A)^2 + V)";

/// Rationals serialize as "num/den" strings, denominator always present.
inline std::string rational_json_str(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Json scalar_json(const GaussianRational& c) {
    return Json{{"re", rational_json_str(c.re)}, {"im", rational_json_str(c.im)}};
}

inline Json bigint_json(const BigInt& v) {
    static const BigInt kSafe("9007199254740992");  // 2^53
    if (v <= kSafe && v >= -kSafe) return v.convert_to<std::int64_t>();
    return v.str();
}

/// Term list [{exps, t_exp, re, im}], ascending monomial order.
inline Json poly_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms())
        arr.push_back(Json{{"exps", m.x},
                           {"t_exp", m.t},
                           {"re", rational_json_str(c.re)},
                           {"im", rational_json_str(c.im)}});
    return arr;
}

/// Term list [{deriv, coeff}], descending derivative order to match the
/// text format; rejects t-derivatives (none appear in emitted operators).
inline Json diffop_terms_json(const DiffOp& q) {
    Json arr = Json::array();
    const auto& terms = q.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [alpha, f] = *it;
        if (alpha.t != 0)
            throw std::invalid_argument("diffop_terms_json: unexpected t-derivative");
        arr.push_back(Json{{"deriv", alpha.x}, {"coeff", poly_json(f)}});
    }
    return arr;
}

inline Json operator_json(const ExpPolyOp& r) {
    Json branches = Json::array();
    for (const auto& [lambda, b] : r.branches())
        branches.push_back(Json{{"lambda", scalar_json(lambda)}, {"terms", diffop_terms_json(b)}});
    return Json{{"branches", branches}};
}

inline Json operator_json(const DiffOp& q) { return operator_json(ExpPolyOp::from_diffop(q)); }

/// Coefficients ascending in the degree, each as {re, im}.
inline Json upoly_json(const UPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(scalar_json(c));
    return arr;
}

inline Json counts_json(const CountTable& t) {
    Json s = Json::array(), k = Json::array();
    for (const auto& v : t.S) s.push_back(bigint_json(v));
    for (const auto& v : t.K) k.push_back(bigint_json(v));
    Json j;
    j["N_hat"] = bigint_json(t.N_hat);
    j["N_tilde"] = bigint_json(t.N_tilde);
    j["S"] = s;
    j["K"] = k;
    if (t.outside_proven_range) j["outside_proven_range"] = true;
    return j;
}

/// One Killing tensor: [{indices, value}] per stored component.
inline Json symtensor_json(const SymTensor& f) {
    Json arr = Json::array();
    for (const auto& [m, comp] : f)
        arr.push_back(Json{{"indices", m.x}, {"value", poly_json(comp)}});
    return arr;
}

inline Json determining_json(const DeterminingSystem& sys) {
    Json eqs = Json::array();
    for (auto it = sys.equations.rbegin(); it != sys.equations.rend(); ++it) {
        const auto& [slot, expr] = *it;
        Json atoms = Json::array();
        for (auto at = expr.atoms.rbegin(); at != expr.atoms.rend(); ++at) {
            const auto& [key, c] = *at;
            atoms.push_back(Json{{"unknown", key.first.x},
                                 {"deriv", key.second.x},
                                 {"t_deriv", key.second.t},
                                 {"coeff", poly_json(c)}});
        }
        eqs.push_back(Json{{"slot", slot.x}, {"atoms", atoms}});
    }
    return eqs;
}

inline Json eigenvalues_json(const AdjointAnalysis& an) {
    Json arr = Json::array();
    for (const auto& [lambda, mult] : an.eigenvalues)
        arr.push_back(Json{{"lambda", scalar_json(lambda)}, {"multiplicity", mult}});
    return arr;
}

inline Json analysis_json(const AdjointAnalysis& an) {
    Json j;
    j["space_dimension"] = an.dim_W();
    j["invariant_dimension"] = an.dim_U();
    Json ub = Json::array();
    for (const auto& row : an.U) ub.push_back(operator_json(an.ambient.from_coords(row)));
    j["invariant_basis"] = ub;
    j["char_poly"] = upoly_json(an.charpoly);
    j["eigenvalues"] = eigenvalues_json(an);
    j["residual"] = upoly_json(an.residual);
    return j;
}

inline Json chain_json(const AdjointAnalysis&, const SymmetryChain& ch) {
    Json cs = Json::array();
    for (const auto& c : ch.C) cs.push_back(operator_json(c));
    return Json{{"lambda", scalar_json(ch.lambda)},
                {"C", cs},
                {"R", operator_json(ch.R)}};
}

inline Json verdict_json(const Theorem3Verdict& v) {
    Json c1 = Json::array();
    for (const auto& [lambda, k0] : v.case1)
        c1.push_back(Json{{"lambda", scalar_json(lambda)}, {"K0", operator_json(k0)}});
    Json c2 = Json::array();
    for (const auto& [k0, k1] : v.case2)
        c2.push_back(Json{{"K0", operator_json(k0)}, {"K1", operator_json(k1)}});
    Json ms = Json::array();
    for (const auto& k0 : v.mastersymmetries) ms.push_back(operator_json(k0));
    return Json{{"has_time_dependent", v.has_time_dependent},
                {"witnesses_unavailable", v.witnesses_unavailable},
                {"case1", c1},
                {"case2", c2},
                {"mastersymmetries", ms}};
}

}  // namespace schsym
