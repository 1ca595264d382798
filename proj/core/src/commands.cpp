#include "coembed/commands.hpp"

#include "coembed/errors.hpp"
#include "coembed/expression.hpp"
#include "coembed/fixtures.hpp"
#include "coembed/kaehler.hpp"

#include "input.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>
#include <utility>

namespace coembed {

std::optional<std::string_view> fixture_source(std::string_view name)
{
    for (const auto& [key, text] : fixture_sources()) {
        if (key == name) {
            return text;
        }
    }
    return std::nullopt;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& [key, text] : fixture_sources()) {
        out.emplace_back(key);
    }
    return out;
}

namespace {

using io::Document;
using io::Json;
using io::Report;

constexpr std::size_t default_max_degree = 3;
// Associativity failures listed in a report; the count covers the rest.
constexpr std::size_t shown_failures = 8;

struct Options {
    std::string command;
    std::string input;
    std::string demo;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> order;
    std::string output = "json";
};

ReportStatus worst(ReportStatus a, ReportStatus b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

std::string show(const Polynomial& p) { return format_polynomial(reduce_relations(p)); }

Json show_list(const std::vector<Polynomial>& ps)
{
    Json out = Json::array();
    for (const auto& p : ps) {
        out.push_back(show(p));
    }
    return out;
}

Json show_map(const AlgebraPtr& algebra, const std::vector<Polynomial>& images)
{
    Json out = Json::object();
    for (std::size_t g = 0; g < images.size(); ++g) {
        out[algebra->generators()[g]] = show(images[g]);
    }
    return out;
}

Json show_derivation(const Derivation& d) { return show_map(d.algebra(), d.images()); }

Json show_basis(const std::vector<Derivation>& basis)
{
    Json out = Json::array();
    for (const auto& d : basis) {
        out.push_back(show_derivation(d));
    }
    return out;
}

Json solve_summary(const SolveReport& r)
{
    Json out = Json::object();
    out["degree_bound"] = r.degree_bound;
    out["membership_bound"] = r.membership_bound;
    out["status"] = to_string(r.status);
    out["constraints"] = r.constraints;
    out["unknowns"] = r.unknowns;
    out["equations"] = r.equations;
    out["rank"] = r.rank;
    out["dimension"] = r.dimension();
    return out;
}

std::string word(const AlgebraPtr& a, std::initializer_list<std::size_t> letters)
{
    std::string out;
    for (const auto l : letters) {
        out += (out.empty() ? "" : "*") + a->generators()[l];
    }
    return out;
}

std::size_t max_degree_of(const Document& doc, const Options& opts)
{
    if (opts.max_degree) {
        return *opts.max_degree;
    }
    return doc.size_option("max_degree").value_or(default_max_degree);
}

Json hom_summary(const AlgebraHom& pi, const std::optional<Ideal>& kernel, bool& ok)
{
    const HomCheck check = check_hom(pi);
    Json out = Json::object();
    out["domain"] = pi.domain()->name();
    out["codomain"] = pi.codomain()->name();
    out["images"] = show_map(pi.domain(), pi.images());
    if (pi.witnessed()) {
        out["witnesses"] = show_map(pi.codomain(), pi.witnesses());
    }
    out["is_hom"] = check.failing_relations.empty();
    Json failing = Json::array();
    for (std::size_t k = 0; k < check.failing_relations.size(); ++k) {
        Json f = Json::object();
        f["relation"] = format_terms(pi.domain()->relations()[check.failing_relations[k]], pi.domain()->generators());
        f["image"] = show(check.relation_images[k]);
        failing.push_back(f);
    }
    out["failing_relations"] = failing;
    if (pi.witnessed()) {
        Json bad = Json::array();
        for (const auto y : check.failing_witnesses) {
            bad.push_back(pi.codomain()->generators()[y]);
        }
        out["witnesses_hold"] = check.failing_witnesses.empty();
        out["failing_witnesses"] = bad;
    }
    ok = check.ok;
    if (kernel) {
        bool zero = true;
        for (const auto& k : kernel->generators()) {
            zero = zero && reduce_relations(pi.apply(k)).is_zero();
        }
        out["kernel"] = show_list(kernel->generators());
        out["kernel_maps_to_zero"] = zero;
        ok = ok && zero;
    }
    out["check"] = ok;
    return out;
}

// Lift ladder d = 1..max_degree; stops at the first feasible bound.
Json lift_ladder(const AlgebraHom& pi, const std::optional<Ideal>& kernel, const io::NamedDerivation& target,
                 std::size_t max_degree, bool& liftable)
{
    Json out = Json::object();
    out["name"] = target.name;
    out["images"] = show_derivation(target.derivation);
    Json ladder = Json::array();
    liftable = false;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        SolveOptions options;
        options.preserve = kernel;
        options.pushforward = PushforwardConstraint{pi, target.derivation};
        const SolveReport r = solve_derivations(pi.domain(), d, options);
        Json step = Json::object();
        step["degree"] = d;
        step["status"] = to_string(r.status);
        step["unknowns"] = r.unknowns;
        step["equations"] = r.equations;
        step["rank"] = r.rank;
        ladder.push_back(step);
        if (r.feasible()) {
            liftable = true;
            const Derivation& lift = *r.particular;
            out["verdict"] = "liftable";
            out["degree"] = d;
            out["lift"] = show_derivation(lift);
            out["lift_is_derivation"] = check_derivation(lift).ok;
            bool verified = false;
            try {
                verified = equivalent(pushforward(lift, pi, kernel), target.derivation);
            } catch (const NotInDerPi&) {
                verified = false;
            }
            out["pushforward_matches_target"] = verified;
            break;
        }
    }
    if (!liftable) {
        out["verdict"] = "infeasible-within-bound";
        out["degree"] = max_degree;
    }
    out["ladder"] = ladder;
    return out;
}

Json pushforward_entry(const io::NamedDerivation& d, const AlgebraHom& pi, const std::optional<Ideal>& kernel)
{
    Json out = Json::object();
    out["name"] = d.name;
    out["images"] = show_derivation(d.derivation);
    try {
        out["pushforward"] = show_derivation(pushforward(d.derivation, pi, kernel));
        out["in_der_pi"] = true;
    } catch (const NotInDerPi& e) {
        out["in_der_pi"] = false;
        out["reason"] = e.what();
    }
    return out;
}

// ---------------------------------------------------------------------------

ReportStatus cmd_check_presentation(const Document& doc, const Options&, Json& payload)
{
    ReportStatus status = ReportStatus::ok;
    Json algebras = Json::array();
    for (const auto& a : doc.algebras()) {
        Json node = Json::object();
        node["name"] = a->name();
        node["kind"] = to_string(a->kind());
        node["scalars"] = a->field() == ScalarField::gaussian ? "Qi" : "Q";
        node["generators"] = a->generators();
        Json relations = Json::array();
        for (const auto& r : a->relations()) {
            relations.push_back(format_terms(r, a->generators()));
        }
        node["relations"] = relations;
        if (a->kind() == AlgebraKind::commutative && !a->relations().empty()) {
            node["groebner_basis"] = show_list(relation_ideal(a)->groebner_basis());
        }
        if (a->kind() == AlgebraKind::pbw) {
            const ConfluenceReport c = check_pbw_confluence(*a);
            node["confluent"] = c.confluent;
            Json failures = Json::array();
            for (const auto& f : c.failures) {
                Json item = Json::object();
                item["overlap"] = word(a, {f.k, f.j, f.i});
                item["via_left"] = format_terms(f.via_left, a->generators());
                item["via_right"] = format_terms(f.via_right, a->generators());
                failures.push_back(item);
            }
            node["confluence_failures"] = failures;
            if (!c.confluent) {
                status = ReportStatus::axiom_failure;
            }
        }
        algebras.push_back(node);
    }
    payload["algebras"] = algebras;
    if (doc.has("hom")) {
        bool ok = true;
        payload["hom"] = hom_summary(doc.hom(), doc.kernel(), ok);
        if (!ok) {
            status = worst(status, ReportStatus::axiom_failure);
        }
    }
    return status;
}

ReportStatus cmd_derivations(const Document& doc, const Options& opts, Json& payload)
{
    const AlgebraPtr& algebra = doc.algebra_for("ideal");
    const std::size_t d = max_degree_of(doc, opts);
    SolveOptions options;
    if (doc.has("ideal")) {
        options.preserve = doc.ideal("ideal", algebra);
        payload["preserve"] = show_list(options.preserve->generators());
    }
    const SolveReport r = solve_derivations(algebra, d, options);
    payload["algebra"] = algebra->name();
    payload["solve"] = solve_summary(r);
    payload["basis"] = show_basis(r.basis);
    bool all = true;
    for (const auto& b : r.basis) {
        all = all && check_derivation(b).ok;
    }
    payload["basis_checked"] = all;
    return all ? ReportStatus::ok : ReportStatus::axiom_failure;
}

ReportStatus cmd_coembed(const Document& doc, const Options& opts, Json& payload)
{
    const AlgebraHom pi = doc.hom();
    const std::optional<Ideal> kernel = doc.kernel();
    const std::size_t d = max_degree_of(doc, opts);
    const std::size_t basis_degree = doc.size_option("basis_degree").value_or(d);

    bool hom_ok = true;
    payload["hom"] = hom_summary(pi, kernel, hom_ok);
    if (!hom_ok) {
        return ReportStatus::axiom_failure;
    }

    SolveOptions options;
    options.preserve = kernel;
    const SolveReport der_pi = solve_derivations(pi.domain(), basis_degree, options);
    Json der = solve_summary(der_pi);
    der["basis"] = show_basis(der_pi.basis);
    Json pushed = Json::array();
    for (const auto& b : der_pi.basis) {
        pushed.push_back(show_derivation(pushforward(b, pi, kernel)));
    }
    der["pushforwards"] = pushed;
    payload["der_pi"] = der;

    ReportStatus status = ReportStatus::ok;
    const auto targets = doc.derivations("targets", pi.codomain());
    Json verdicts = Json::array();
    for (const auto& t : targets) {
        bool liftable = false;
        verdicts.push_back(lift_ladder(pi, kernel, t, d, liftable));
        if (!liftable) {
            status = worst(status, ReportStatus::infeasible_within_bound);
        }
    }
    payload["targets"] = verdicts;

    if (pi.domain()->kind() == AlgebraKind::free && pi.witnessed()) {
        Json lifts = Json::array();
        for (const auto& t : targets) {
            const Derivation lift = free_lift(pi, t.derivation);
            Json item = Json::object();
            item["name"] = t.name;
            item["lift"] = show_derivation(lift);
            item["pushforward_matches_target"] = equivalent(pushforward(lift, pi, kernel), t.derivation);
            lifts.push_back(item);
        }
        payload["free_lifts"] = lifts;
    }

    const auto sources = doc.derivations("derivations", pi.domain());
    if (!sources.empty()) {
        Json items = Json::array();
        for (const auto& s : sources) {
            items.push_back(pushforward_entry(s, pi, kernel));
        }
        payload["pushforwards"] = items;
    }
    return status;
}

ReportStatus cmd_inner(const Document& doc, const Options& opts, Json& payload)
{
    const std::optional<AlgebraHom> pi = doc.has("hom") ? std::optional<AlgebraHom>(doc.hom()) : std::nullopt;
    const std::optional<Ideal> kernel = pi ? doc.kernel() : std::nullopt;
    const AlgebraPtr& algebra = pi ? pi->domain() : doc.algebras().front();
    const std::size_t d = max_degree_of(doc, opts);
    ReportStatus status = ReportStatus::ok;
    Json items = Json::array();
    for (const auto& nd : doc.derivations("derivations", algebra)) {
        Json item = Json::object();
        item["name"] = nd.name;
        item["images"] = show_derivation(nd.derivation);
        const bool is_derivation = check_derivation(nd.derivation).ok;
        item["is_derivation"] = is_derivation;
        if (!is_derivation) {
            status = worst(status, ReportStatus::axiom_failure);
            items.push_back(item);
            continue;
        }
        const auto witness = is_inner(nd.derivation, d);
        item["inner"] = witness.has_value();
        item["degree_bound"] = d;
        if (witness) {
            item["witness"] = show(*witness);
        } else {
            status = worst(status, ReportStatus::infeasible_within_bound);
        }
        if (pi) {
            Json pushed = pushforward_entry(nd, *pi, kernel);
            if (witness && pushed["in_der_pi"].get<bool>()) {
                const Derivation image_inner = Derivation::inner(pi->apply(*witness));
                pushed["matches_inner_of_image"] =
                    equivalent(pushforward(nd.derivation, *pi, kernel), image_inner);
            }
            item["pushforward"] = pushed;
        }
        items.push_back(item);
    }
    payload["algebra"] = algebra->name();
    payload["derivations"] = items;
    return status;
}

ReportStatus cmd_kaehler(const Document& doc, const Options& opts, Json& payload)
{
    const AlgebraPtr& algebra = doc.algebras().front();
    const std::size_t d = max_degree_of(doc, opts);
    const KaehlerPresentation omega = kaehler_presentation(algebra);
    payload["algebra"] = algebra->name();
    payload["rank"] = omega.rank();
    Json rows = Json::array();
    for (const auto& row : omega.rows) {
        rows.push_back(show_list(row));
    }
    payload["relation_rows"] = rows;

    const HomDerCorrespondence corr = hom_der_correspondence(omega, d);
    const SolveReport solved = solve_derivations(algebra, d);
    payload["degree_bound"] = d;
    payload["module_map_dimension"] = corr.derivations.size();
    payload["derivation_dimension"] = solved.dimension();
    payload["module_map_basis"] = show_basis(corr.derivations);
    const bool agree = same_span(corr.derivations, solved.basis);
    payload["spans_agree"] = agree;
    ReportStatus status = agree ? ReportStatus::ok : ReportStatus::axiom_failure;

    if (doc.has("hom")) {
        const AlgebraHom pi = doc.hom();
        if (pi.domain()->kind() == AlgebraKind::commutative && pi.codomain()->kind() == AlgebraKind::commutative) {
            Json induced = Json::object();
            Json matrix = Json::array();
            for (const auto& row : induced_map(pi)) {
                matrix.push_back(show_list(row));
            }
            induced["rows"] = matrix;
            induced["surjective_within_bound"] = induced_map_surjective(pi, d);
            payload["induced_map"] = induced;
        }
    }
    return status;
}

ReportStatus cmd_poisson(const Document& doc, const Options& opts, Json& payload)
{
    const PoissonStructure p = doc.poisson();
    const AlgebraPtr& ring = p.ring();
    const std::size_t d = max_degree_of(doc, opts);

    Json structure = Json::array();
    for (const auto& [key, value] : p.components()) {
        Json c = Json::object();
        c["left"] = ring->generators()[key.first];
        c["right"] = ring->generators()[key.second];
        c["value"] = show(value);
        structure.push_back(c);
    }
    payload["algebra"] = ring->name();
    payload["structure"] = structure;
    const JacobiCheck jacobi = jacobi_check(p);
    payload["jacobi"] = jacobi.ok;
    if (!jacobi.ok) {
        const auto& t = *jacobi.failing_triple;
        payload["jacobi_failure"] = {{"triple", word(ring, {t[0], t[1], t[2]})}, {"value", show(*jacobi.value)}};
        return ReportStatus::axiom_failure;
    }

    const SolveReport fields = solve_poisson_vector_fields(p, d);
    Json pf = solve_summary(fields);
    pf["basis"] = show_basis(fields.basis);
    payload["poisson_fields"] = pf;

    const auto named = doc.derivations("fields", ring);
    if (!named.empty()) {
        Json items = Json::array();
        for (const auto& f : named) {
            Json item = Json::object();
            item["name"] = f.name;
            item["images"] = show_derivation(f.derivation);
            item["is_poisson"] = is_poisson_vector_field(p, f.derivation);
            const auto h = is_hamiltonian(p, f.derivation, d);
            item["hamiltonian"] = h.has_value();
            if (h) {
                item["hamiltonian_function"] = show(*h);
            }
            items.push_back(item);
        }
        payload["fields"] = items;
    }

    ReportStatus status = ReportStatus::ok;
    if (doc.has("ideal")) {
        const Ideal j = doc.ideal("ideal", ring);
        Json co = Json::object();
        co["ideal"] = show_list(j.generators());
        const CoisotropyReport c = coisotropy_and_normalizer(p, j);
        co["coisotropic"] = c.coisotropic;
        if (c.failing_pair) {
            co["failing_pair"] = {show(j.generators()[c.failing_pair->first]),
                                  show(j.generators()[c.failing_pair->second])};
        }
        if (doc.root().contains("classify")) {
            Json classes = Json::array();
            for (const auto& f : doc.polynomials(doc.root().at("classify"), ring)) {
                classes.push_back({{"element", show(f)},
                                   {"class", to_string(*coisotropy_and_normalizer(p, j, f).classification)}});
            }
            co["classification"] = classes;
        }
        payload["coisotropy"] = co;

        if (doc.has("hom")) {
            const AlgebraHom pi = doc.hom();
            Json restricted = Json::array();
            for (const auto& t : doc.derivations("targets", pi.codomain())) {
                Json item = Json::object();
                item["name"] = t.name;
                item["images"] = show_derivation(t.derivation);
                Json ladder = Json::array();
                bool feasible = false;
                for (std::size_t k = 1; k <= d && !feasible; ++k) {
                    const SolveReport r = solve_poisson_vector_fields(p, k, PoissonRestriction{j, pi, t.derivation});
                    ladder.push_back({{"degree", k}, {"status", to_string(r.status)}, {"rank", r.rank}});
                    if (r.feasible()) {
                        feasible = true;
                        item["verdict"] = "liftable";
                        item["degree"] = k;
                        item["lift"] = show_derivation(*r.particular);
                        item["lift_is_poisson"] = is_poisson_vector_field(p, *r.particular);
                    }
                }
                if (!feasible) {
                    item["verdict"] = "infeasible-within-bound";
                    item["degree"] = d;
                    status = worst(status, ReportStatus::infeasible_within_bound);
                }
                item["ladder"] = ladder;
                restricted.push_back(item);
            }
            payload["restrictions"] = restricted;
        }
    }
    return status;
}

Json operator_terms(const BidiffOperator& op)
{
    Json out = Json::array();
    for (const auto& [key, coeff] : op.terms()) {
        out.push_back({{"coeff", show(coeff)}, {"alpha", key.first}, {"beta", key.second}});
    }
    return out;
}

Json axioms_json(const AlgebraPtr& ring, const StarAxiomReport& a)
{
    Json out = Json::object();
    out["probe_degree"] = a.probe_degree;
    out["exhaustive"] = a.exhaustive;
    out["c0_pointwise"] = a.c0_pointwise;
    out["unit_left"] = a.unit_left;
    out["unit_right"] = a.unit_right;
    out["associative"] = a.associative;
    out["c1_antisymmetric"] = a.c1_antisymmetric;
    out["c1_is_bracket"] = a.c1_is_bracket;
    if (a.extracted) {
        Json bracket = Json::array();
        for (const auto& [key, value] : a.extracted->components()) {
            bracket.push_back({{"left", ring->generators()[key.first]},
                               {"right", ring->generators()[key.second]},
                               {"value", show(value)}});
        }
        out["extracted_bracket"] = bracket;
    }
    out["extracted_jacobi"] = a.extracted_jacobi;
    // Smallest triples first; the full list can run to thousands.
    std::vector<const AssociativityFailure*> sorted;
    for (const auto& f : a.associativity_failures) {
        sorted.push_back(&f);
    }
    const auto key = [](const AssociativityFailure& f) {
        return std::make_tuple(f.f.degree() + f.g.degree() + f.h.degree(), f.f.degree(), f.g.degree(), f.h.degree(),
                               f.f, f.g, f.h);
    };
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const AssociativityFailure* x, const AssociativityFailure* y) { return key(*x) < key(*y); });
    if (sorted.size() > shown_failures) {
        sorted.resize(shown_failures);
    }
    out["associativity_failure_count"] = a.associativity_failures.size();
    Json failures = Json::array();
    for (const auto* fp : sorted) {
        const auto& f = *fp;
        failures.push_back({{"f", show(Polynomial::monomial(ring, f.f))},
                            {"g", show(Polynomial::monomial(ring, f.g))},
                            {"h", show(Polynomial::monomial(ring, f.h))},
                            {"order", f.order},
                            {"left", show(f.left)},
                            {"right", show(f.right)}});
    }
    out["associativity_failures"] = failures;
    out["ok"] = a.ok();
    return out;
}

// (f*g)*h and f*(g*h) for the triples listed under "associators".
Json associators_json(const Document& doc, const StarProduct& s)
{
    Json out = Json::array();
    if (!doc.root().contains("associators")) {
        return out;
    }
    const AlgebraPtr& ring = s.ring();
    const auto lift = [&](const Polynomial& p) { return PolySeries::constant(s.order(), p, Polynomial(ring)); };
    for (const auto& triple : doc.root().at("associators")) {
        const auto items = doc.polynomials(triple, ring);
        if (items.size() != 3) {
            throw InvalidInput("an associator needs three expressions");
        }
        const PolySeries left = star_multiply(s, star_multiply(s, items[0], items[1]), lift(items[2]));
        const PolySeries right = star_multiply(s, lift(items[0]), star_multiply(s, items[1], items[2]));
        out.push_back({{"f", show(items[0])},
                       {"g", show(items[1])},
                       {"h", show(items[2])},
                       {"left", format_series(left)},
                       {"right", format_series(right)},
                       {"equal", left == right}});
    }
    return out;
}

ReportStatus cmd_star(const Document& doc, const Options& opts, Json& payload)
{
    const StarProduct s = doc.star(opts.order);
    const AlgebraPtr& ring = s.ring();
    const std::size_t d = max_degree_of(doc, opts);
    const unsigned minimum = s.max_operator_order() + 1;
    const unsigned probe = static_cast<unsigned>(doc.size_option("probe_degree").value_or(minimum));

    payload["algebra"] = ring->name();
    payload["model"] = "polynomial functions; operator identities decided on probe monomials";
    payload["order"] = s.order();
    Json ops = Json::array();
    for (std::size_t k = 1; k <= s.order(); ++k) {
        ops.push_back({{"k", k}, {"terms", operator_terms(s.op(k))}});
    }
    payload["operators"] = ops;

    const StarAxiomReport axioms = check_star_axioms(s, probe);
    payload["axioms"] = axioms_json(ring, axioms);
    ReportStatus status = axioms.ok() ? ReportStatus::ok : ReportStatus::axiom_failure;

    Json commutators = Json::array();
    for (std::size_t i = 0; i < ring->generator_count(); ++i) {
        for (std::size_t j = i + 1; j < ring->generator_count(); ++j) {
            const Polynomial xi = Polynomial::generator(ring, i);
            const Polynomial xj = Polynomial::generator(ring, j);
            PolySeries c = star_multiply(s, xi, xj);
            const PolySeries back = star_multiply(s, xj, xi);
            for (std::size_t k = 0; k <= c.order(); ++k) {
                c[k] -= back[k];
            }
            commutators.push_back({{"left", ring->generators()[i]},
                                   {"right", ring->generators()[j]},
                                   {"value", format_series(c)}});
        }
    }
    payload["commutators"] = commutators;

    if (doc.root().contains("products")) {
        Json products = Json::array();
        for (const auto& pair : doc.root().at("products")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw InvalidInput("products entries must be [f, g] pairs");
            }
            const Polynomial f = doc.polynomial(pair[0], ring);
            const Polynomial g = doc.polynomial(pair[1], ring);
            products.push_back({{"f", show(f)}, {"g", show(g)}, {"value", format_series(star_multiply(s, f, g))}});
        }
        payload["products"] = products;
    }

    if (doc.has("ideal")) {
        const Ideal j = doc.ideal("ideal", ring);
        const std::size_t td = doc.size_option("tangent_degree").value_or(d);
        const TangentialityReport t = tangentiality_check(s, j, td);
        Json tj = Json::object();
        tj["ideal"] = show_list(j.generators());
        tj["degree_bound"] = td;
        tj["tangential"] = t.tangential;
        tj["checked"] = t.checked;
        if (t.failure) {
            tj["failure"] = {{"k", t.failure->k},
                             {"element", show(t.failure->element)},
                             {"probe", show(Polynomial::monomial(ring, t.failure->probe))},
                             {"value", show(t.failure->value)}};
            status = worst(status, ReportStatus::axiom_failure);
        }
        payload["tangentiality"] = tj;
    }

    if (doc.root().contains("associators")) {
        payload["associators"] = associators_json(doc, s);
    }

    if (doc.root().contains("tamper")) {
        Json tampered = Json::array();
        for (const auto& k : doc.root().at("tamper")) {
            const std::size_t index = k.get<std::size_t>();
            if (index == 0 || index > s.order()) {
                continue;
            }
            const StarProduct t = s.with_operator(index, BidiffOperator(ring));
            Json item = Json::object();
            item["zeroed"] = index;
            item["axioms"] = axioms_json(ring, check_star_axioms(t, probe));
            if (doc.root().contains("associators")) {
                item["associators"] = associators_json(doc, t);
            }
            tampered.push_back(item);
        }
        payload["tamper"] = tampered;
    }

    if (s.order() == 1) {
        const Order1Report o = solve_order1_derivations(s, d);
        Json oj = Json::object();
        oj["degree_bound"] = o.degree_bound;
        oj["unknowns"] = o.unknowns;
        oj["rank"] = o.rank;
        oj["dimension"] = o.dimension();
        oj["poisson_dimension"] = o.poisson_dimension;
        oj["field_dimension"] = o.field_dimension;
        oj["dimensions_match"] = o.dimensions_match();
        payload["order1_derivations"] = oj;
        if (!o.dimensions_match()) {
            status = worst(status, ReportStatus::axiom_failure);
        }
    }
    return status;
}

using Handler = std::function<ReportStatus(const Document&, const Options&, Json&)>;

Handler handler_for(const std::string& command)
{
    if (command == "check-presentation") {
        return cmd_check_presentation;
    }
    if (command == "derivations") {
        return cmd_derivations;
    }
    if (command == "coembed") {
        return cmd_coembed;
    }
    if (command == "inner") {
        return cmd_inner;
    }
    if (command == "kaehler") {
        return cmd_kaehler;
    }
    if (command == "poisson") {
        return cmd_poisson;
    }
    if (command == "star") {
        return cmd_star;
    }
    throw InvalidInput("unknown command '" + command + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Values listed under "expected" as {json-pointer: value} must match the payload.
Json compare_expected(const Json& expected, const Json& payload, bool& matches)
{
    Json out = Json::array();
    matches = true;
    for (const auto& [pointer, value] : expected.items()) {
        const Json::json_pointer ptr(pointer);
        const bool present = payload.contains(ptr);
        const bool ok = present && payload.at(ptr) == value;
        matches = matches && ok;
        out.push_back({{"path", pointer}, {"expected", value}, {"actual", present ? payload.at(ptr) : Json()},
                       {"ok", ok}});
    }
    return out;
}

ReportStatus execute(const Options& opts, Json& payload)
{
    if (opts.command == "demo") {
        const auto source = fixture_source(opts.demo);
        if (!source) {
            std::string names;
            for (const auto& n : fixture_names()) {
                names += (names.empty() ? "" : ", ") + n;
            }
            throw InvalidInput("unknown demo '" + opts.demo + "' (available: " + names + ")");
        }
        const Document doc = Document::parse(*source);
        const std::string command = doc.root().value("command", std::string("coembed"));
        payload["fixture"] = opts.demo;
        payload["description"] = doc.root().value("description", std::string());
        payload["ran"] = command;
        Json inner = Json::object();
        const ReportStatus status = handler_for(command)(doc, opts, inner);
        payload["result"] = inner;
        if (doc.has("expected") && !opts.max_degree && !opts.order) {
            bool matches = true;
            payload["expectations"] = compare_expected(doc.root().at("expected"), inner, matches);
            payload["matches_expected"] = matches;
        }
        return status;
    }
    if (opts.input.empty()) {
        throw InvalidInput("--input is required for '" + opts.command + "'");
    }
    const std::string text = read_file(opts.input);
    const auto policy =
        opts.command == "check-presentation" ? ConfluencePolicy::report : ConfluencePolicy::enforce;
    const Document doc = Document::parse(text, policy);
    return handler_for(opts.command)(doc, opts, payload);
}

std::string render(const Report& report, const std::string& output)
{
    return output == "text" ? io::render_text(report) : io::render_json(report);
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args)
{
    CLI::App app{"Derivations, coembeddings and star products with exact arithmetic", "coembed"};
    app.require_subcommand(1);
    Options opts;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> order;

    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* input = sub->add_option("--input", opts.input, "input JSON file");
        if (needs_input) {
            input->required();
        }
        sub->add_option("--max-degree", max_degree, "degree bound for solvers and ladders");
        sub->add_option("--order", order, "truncation order of the star product");
        sub->add_option("--output", opts.output, "report format")
            ->check(CLI::IsMember({"json", "text"}))
            ->default_str("json");
    };
    const std::pair<const char*, const char*> subcommands[] = {
        {"check-presentation", "validate algebras, relations and a homomorphism"},
        {"derivations", "solve for derivations up to a degree bound"},
        {"coembed", "run the derivation lifting ladder for a surjection"},
        {"inner", "decide whether a derivation is inner"},
        {"kaehler", "Kaehler differentials and the derivation correspondence"},
        {"poisson", "Jacobi check, Poisson fields and coisotropy"},
        {"star", "star product axioms, tangentiality and order-1 derivations"},
    };
    for (const auto& [name, about] : subcommands) {
        common(app.add_subcommand(name, about), true);
    }
    auto* demo = app.add_subcommand("demo", "run a bundled example end-to-end");
    demo->add_option("name", opts.demo, "fixture name")->required();
    common(demo, false);

    std::vector<const char*> argv{"coembed"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    Report report;
    report.arguments = args;
    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        report.command = args.empty() ? "coembed" : args.front();
        report.arguments.erase(report.arguments.begin(), report.arguments.begin() + (args.empty() ? 0 : 1));
        report.status = ReportStatus::error;
        report.payload["message"] = e.what();
        result.status = report.status;
        result.exit_code = exit_code(report.status);
        result.output = render(report, "json");
        return result;
    }
    opts.command = app.get_subcommands().front()->get_name();
    opts.max_degree = max_degree;
    opts.order = order;
    report.command = opts.command;
    report.arguments.erase(report.arguments.begin());

    try {
        report.status = execute(opts, report.payload);
    } catch (const Error& e) {
        report.status = ReportStatus::error;
        report.payload = Json::object();
        report.payload["message"] = e.what();
    } catch (const Json::exception& e) {
        report.status = ReportStatus::error;
        report.payload = Json::object();
        report.payload["message"] = std::string("malformed input: ") + e.what();
    }
    result.status = report.status;
    result.exit_code = exit_code(report.status);
    result.output = render(report, opts.output);
    return result;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) {
        args.emplace_back(argv[k]);
    }
    const CommandResult result = run_command(args);
    out << result.output;
    if (result.status == ReportStatus::error) {
        err << "coembed: " << to_string(result.status) << '\n';
    }
    return result.exit_code;
}

} // namespace coembed
