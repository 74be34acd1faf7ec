#include "frob/cli.hpp"

#include "frob/constellation.hpp"
#include "frob/dot.hpp"
#include "frob/errors.hpp"
#include "frob/fblowup.hpp"
#include "frob/fiber.hpp"
#include "frob/fpurity.hpp"
#include "frob/ghilb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace frob::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw precondition_error("--" + flag + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) throw precondition_error("--" + flag + " is empty");
    return out;
}

std::uint32_t checked_prime(std::int64_t p) {
    if (p < 2 || p > 1'000'000 || !is_prime(static_cast<std::uint64_t>(p)))
        throw precondition_error(std::to_string(p) + " is not a prime");
    return static_cast<std::uint32_t>(p);
}

std::int64_t power_q(std::uint32_t p, std::int64_t e) {
    if (e < 0 || e > 30) throw precondition_error("--e must lie in [0, 30]");
    const auto q = ipow(p, static_cast<unsigned>(e));
    if (q > (std::uint64_t{1} << 31)) throw precondition_error("q = p^e is too large");
    return static_cast<std::int64_t>(q);
}

std::uint32_t smallest_tame_prime(std::uint64_t n) {
    for (std::uint32_t p = 2;; ++p)
        if (is_prime(p) && n % p != 0) return p;
}

Json vec(const Vec2& v) { return Json::array({v[0], v[1]}); }

Json fan_json(const Fan2& f) {
    Json j;
    if (f.tag) j["lattice"] = {{"n", f.tag->first}, {"a", f.tag->second}};
    j["lattice_hnf"] = Json::array({f.lattice.d1(), f.lattice.x(), f.lattice.d2()});
    j["denominator"] = f.scale;
    Json rays = Json::array();
    for (const auto& r : f.rays) rays.push_back(vec(r));
    j["rays_scaled"] = rays;
    Json cones = Json::array();
    for (const auto& c : f.cones) cones.push_back(Json::array({c[0], c[1]}));
    j["cones"] = cones;
    Json interior = Json::array();
    for (const auto& r : f.interior_rays()) interior.push_back(vec(r));
    j["interior_rays"] = interior;
    j["smooth"] = f.is_smooth();
    j["warnings"] = f.warnings;
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw precondition_error("cannot write " + path);
    os << text;
}

AffineSemigroup curve_semigroup(const std::string& text) {
    return AffineSemigroup::numerical(parse_int_list(text, "semigroup"));
}

struct Options {
    std::int64_t p = 0;
    std::int64_t e = 1;
    std::string group;
    std::string semigroup;
    std::string theta;
    std::string alpha;
    std::string constellation;
    std::string dot;
    std::string polynomial;
};

Json base_document(const Json& inputs) {
    Json j;
    j["tool_version"] = tool_version;
    j["inputs"] = inputs;
    return j;
}

Json run_fpure(const Options& o) {
    const auto p = checked_prime(o.p);
    auto doc = base_document({{"p", p}, {"polynomial", o.polynomial}});
    const auto f = parse_polynomial(o.polynomial, p);
    const auto r = is_f_pure_hypersurface(f, p);
    doc["f_pure"] = r.f_pure;
    doc["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
    return doc;
}

Json run_decompose(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"group", o.group}, {"p", p}, {"e", o.e}});
    const auto act = parse_cyclic_action(o.group, p);
    const auto push = pushforward_decomposition(act, static_cast<std::uint64_t>(q));
    const auto table = coinvariant_table(act, static_cast<std::uint64_t>(q));
    Json chars = Json::array();
    for (const auto& c : act.characters()) chars.push_back(c.residues.size() == 1 ? Json(c.residues[0]) : Json(c.residues));
    doc["q"] = q;
    doc["characters"] = chars;
    doc["coinvariants"] = table.counts;
    doc["pushforward"] = push;
    doc["full"] = std::all_of(push.begin(), push.end(), [](std::uint64_t m) { return m > 0; });
    doc["all_irreducibles"] = contains_all_irreducibles(act, static_cast<std::uint64_t>(q));
    return doc;
}

AbelianAction plane_action(const Options& o, std::uint32_t& p) {
    if (o.p != 0) {
        p = checked_prime(o.p);
        return parse_cyclic_action(o.group, p);
    }
    // Parse once with a throwaway prime to learn |G|, then pick the smallest tame prime.
    const auto probe = parse_cyclic_action(o.group, 2);
    p = smallest_tame_prime(probe.order());
    return parse_cyclic_action(o.group, p);
}

Json run_ghilb(const Options& o) {
    std::uint32_t p = 0;
    const auto act = plane_action(o, p);
    auto doc = base_document({{"group", o.group}, {"p", p}});
    const auto graphs = enumerate_g_graphs(act);
    const auto fan = hilb_fan(act);
    doc.update(fan_json(fan));
    Json gs = Json::array();
    for (const auto& g : graphs) gs.push_back(to_string(g));
    doc["graphs"] = gs;
    if (!o.dot.empty()) write_file(o.dot, staircase_dot(graphs));
    return doc;
}

Json run_fblowup(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"group", o.group}, {"p", p}, {"e", o.e}});
    const auto act = parse_cyclic_action(o.group, p);
    const auto fan = fblowup_fan(quotient_toric_model(act), q);
    doc["q"] = q;
    doc.update(fan_json(fan));
    if (!o.dot.empty()) write_file(o.dot, fan_dot(fan));
    return doc;
}

Json run_compare(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"group", o.group}, {"p", p}, {"e", o.e}});
    const auto act = parse_cyclic_action(o.group, p);
    if (!act.is_tame()) throw precondition_error("wild action: p divides |G|");
    const auto hilb = hilb_fan(act);
    const auto fb = fblowup_fan(quotient_toric_model(act), q);
    const auto cmp = compare_fans(hilb, fb, act, q);
    doc["equal"] = cmp.equal;
    Json rays = Json::array();
    for (const auto& r : cmp.matched_rays) rays.push_back(vec(r));
    doc["interior_rays"] = rays;
    doc["q"] = q;
    doc["denominator"] = hilb.scale;
    doc["below_bound"] = cmp.below_bound;
    Json a = Json::array(), b = Json::array();
    for (const auto& r : cmp.only_in_hilb) a.push_back(vec(r));
    for (const auto& r : cmp.only_in_fblowup) b.push_back(vec(r));
    doc["only_in_hilb"] = a;
    doc["only_in_fblowup"] = b;
    doc["smooth"] = fb.is_smooth();
    if (!o.dot.empty()) write_file(o.dot, fan_dot(fb));
    return doc;
}

Json run_endring(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"semigroup", o.semigroup}, {"p", p}, {"e", o.e}});
    const auto gamma = curve_semigroup(o.semigroup);
    const auto pieces = residue_decomposition(gamma, q);
    const auto table = end_ring_table(pieces, gamma.scaled(q));
    doc["q"] = q;
    doc["matrix_ring"] = is_full_matrix_ring(table);
    Json residues = Json::array(), pieces_json = Json::array();
    for (const auto& pc : pieces) {
        residues.push_back(pc.residue[0]);
        Json g = Json::array();
        for (const auto& v : pc.module.generators()) g.push_back(v[0]);
        pieces_json.push_back(g);
    }
    doc["residues"] = residues;
    doc["pieces"] = pieces_json;
    Json offsets = Json::array(), free = Json::array(), blocks = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
        Json orow = Json::array(), frow = Json::array(), brow = Json::array();
        for (std::size_t j = 0; j < table.size(); ++j) {
            const auto& off = table.offsets[i][j];
            orow.push_back(off ? Json((*off)[0]) : Json(nullptr));
            frow.push_back(off.has_value());
            Json g = Json::array();
            for (const auto& v : table.blocks[i][j].generators()) g.push_back(v[0]);
            brow.push_back(g);
        }
        offsets.push_back(orow);
        free.push_back(frow);
        blocks.push_back(brow);
    }
    doc["offsets"] = offsets;
    doc["blocks_free"] = free;
    doc["blocks"] = blocks;
    return doc;
}

Json basis_json(const FiberModule& f) {
    Json b = Json::array();
    for (const auto& v : f.basis) b.push_back(v[0]);
    return b;
}

Json run_fiber(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"semigroup", o.semigroup}, {"p", p}, {"e", o.e}});
    const auto f = fiber_at_origin(curve_semigroup(o.semigroup), q, p);
    const auto dv = f.dim_vector();
    doc["q"] = q;
    doc["basis"] = basis_json(f);
    doc["dim_vector"] = Json::array({dv[0], dv[1]});
    return doc;
}

Json run_curve_stability(const Options& o) {
    const auto p = checked_prime(o.p);
    const auto q = power_q(p, o.e);
    auto doc = base_document({{"semigroup", o.semigroup}, {"p", p}, {"e", o.e}, {"alpha", o.alpha}});
    const auto alpha = parse_int_list(o.alpha, "alpha");
    if (alpha.size() != 2 || alpha[0] < 0 || alpha[1] < 0)
        throw precondition_error("--alpha needs two nonnegative entries");
    const auto f = end_action_on_fiber(curve_semigroup(o.semigroup), q, p);
    const std::array<std::int64_t, 2> lambda{1 - q, 1};
    doc["q"] = q;
    doc["lambda"] = Json::array({lambda[0], lambda[1]});
    doc["fiber_basis"] = basis_json(f);
    Json list = Json::array();
    for (const auto& qm : enumerate_monomial_quotients(f, {alpha[0], alpha[1]})) {
        const auto r = lambda_stability_check(qm, lambda);
        const auto dv = qm.dim_vector();
        Json entry;
        entry["basis"] = basis_json(qm);
        entry["dim_vector"] = Json::array({dv[0], dv[1]});
        entry["status"] = to_string(r.status);
        entry["certificate"] = r.certificate ? Json(*r.certificate) : Json(nullptr);
        list.push_back(entry);
    }
    doc["quotients"] = list;
    return doc;
}

GConstellation read_constellation(const std::string& path, const AbelianAction& act) {
    std::ifstream is(path);
    if (!is) throw precondition_error("cannot read constellation file " + path);
    Json j;
    try {
        j = Json::parse(is);
    } catch (const Json::parse_error& e) {
        throw precondition_error("constellation file: " + std::string(e.what()));
    }
    if (!j.contains("coeff") || !j["coeff"].is_object()) throw precondition_error("constellation file needs a \"coeff\" object");
    GConstellation c(act);
    for (const auto& [key, value] : j["coeff"].items()) {
        const auto at = key.find('@');
        if (at == std::string::npos) throw precondition_error("coefficient key '" + key + "' is not of the form x@chi");
        const auto var = key.substr(0, at);
        std::size_t index = act.dim();
        for (std::size_t i = 0; i < act.dim(); ++i)
            if (variable_name(i, act.dim()) == var) index = i;
        if (index == act.dim()) throw precondition_error("unknown variable '" + var + "'");
        const auto chi = parse_int_list(key.substr(at + 1), "constellation");
        if (!value.is_number_integer()) throw precondition_error("coefficient '" + key + "' is not an integer");
        c.set_coeff(index, act.index_of(act.reduce(chi)), value.get<std::int64_t>());
    }
    return c;
}

Json run_stability_check(const Options& o) {
    std::uint32_t p = 0;
    const auto act = plane_action(o, p);
    auto doc = base_document({{"group", o.group}, {"p", p}, {"constellation", o.constellation}, {"theta", o.theta}});
    const auto c = read_constellation(o.constellation, act);
    const auto theta = parse_int_list(o.theta, "theta");
    const auto check = check_constellation(c);
    doc["valid"] = check.valid;
    doc["at_origin"] = check.at_origin;
    doc["violations"] = check.violations;
    doc["status"] = check.valid ? Json(to_string(theta_stability(c, theta))) : Json(nullptr);
    doc["lambda"] = theta_to_lambda(theta, act);
    if (!o.dot.empty()) write_file(o.dot, quiver_dot(c));
    return doc;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius pushforwards, G-Hilbert and F-blowup fans, curve endomorphism rings", "frob"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    Options o;
    std::function<Json(const Options&)> action;

    auto group_cmd = [&](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->require_subcommand(1);
        return sub;
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                    std::function<Json(const Options&)> fn) {
        auto* sub = parent->add_subcommand(name, desc);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto add_p = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--p", o.p, "prime characteristic");
        if (required) opt->required();
    };
    auto add_e = [&](CLI::App* s) { s->add_option("--e", o.e, "Frobenius iterate, q = p^e")->required(); };
    auto add_dot = [&](CLI::App* s) { s->add_option("--dot", o.dot, "write a DOT drawing to this path"); };

    auto* fpure = group_cmd("fpure", "F-purity of hypersurfaces");
    auto* fcheck = leaf(fpure, "check", "Fedder test for a polynomial", run_fpure);
    add_p(fcheck, true);
    fcheck->add_option("polynomial", o.polynomial, "polynomial such as x^2+y^2")->required();

    auto* quotient = group_cmd("quotient", "quotient singularities by diagonal cyclic groups");
    auto* decompose = leaf(quotient, "decompose", "coinvariant table and Frobenius pushforward", run_decompose);
    decompose->add_option("--group", o.group, "action 1/n(a1,...,ad)")->required();
    add_p(decompose, true);
    add_e(decompose);
    auto* ghilb = leaf(quotient, "ghilb", "G-graphs and the G-Hilbert fan", run_ghilb);
    ghilb->add_option("--group", o.group, "action 1/n(1,a)")->required();
    add_p(ghilb, false);
    add_dot(ghilb);

    auto* toric = group_cmd("toric", "toric surfaces");
    auto* fblowup = leaf(toric, "fblowup", "F-blowup fan of the quotient surface", run_fblowup);
    auto* compare = leaf(toric, "compare", "compare the G-Hilbert and F-blowup fans", run_compare);
    for (auto* s : {fblowup, compare}) {
        s->add_option("--group", o.group, "action 1/n(1,a)")->required();
        add_p(s, true);
        add_e(s);
        add_dot(s);
    }

    auto* curve = group_cmd("curve", "monomial curves given by numerical semigroups");
    auto* endring = leaf(curve, "endring", "endomorphism ring of R over R^q", run_endring);
    auto* fiber = leaf(curve, "fiber", "fiber of R over the origin of Spec R^q", run_fiber);
    auto* cstab = leaf(curve, "stability", "stability of monomial quotients of the fiber", run_curve_stability);
    for (auto* s : {endring, fiber, cstab}) {
        s->add_option("--semigroup", o.semigroup, "generators g1,g2,...")->required();
        add_p(s, true);
        add_e(s);
    }
    cstab->add_option("--alpha", o.alpha, "dimension vector a1,a2")->required();

    auto* stability = group_cmd("stability", "G-constellations");
    auto* scheck = leaf(stability, "check", "theta-stability of a constellation", run_stability_check);
    scheck->add_option("--group", o.group, "action 1/n(a1,...,ad)")->required();
    scheck->add_option("--constellation", o.constellation, "JSON file with a coeff map")->required();
    scheck->add_option("--theta", o.theta, "comma-separated integers summing to zero")->required()->allow_extra_args(false);
    add_p(scheck, false);
    add_dot(scheck);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    try {
        out << action(o).dump(2) << "\n";
        return ok;
    } catch (const precondition_error& e) {
        err << "precondition violated: " << e.what() << "\n";
        return precondition_failure;
    } catch (const invariant_error& e) {
        err << "internal invariant failed: " << e.what() << "\n";
        return invariant_failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return invariant_failure;
    }
}

} // namespace frob::cli
