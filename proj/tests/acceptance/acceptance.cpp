// One line per acceptance criterion; exit status 0 iff all pass.

#include "coembed/commands.hpp"
#include "coembed/derivation.hpp"
#include "coembed/expression.hpp"
#include "coembed/ideal.hpp"
#include "coembed/kaehler.hpp"
#include "coembed/morphism.hpp"
#include "coembed/poisson.hpp"
#include "coembed/starprod.hpp"

#include "builders.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace coembed;
using fixture::poly;
using fixture::polys;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void require(bool ok, const std::string& what)
    {
        if (!ok && outcome_.pass) {
            outcome_.pass = false;
            outcome_.detail = what;
        }
    }
    Outcome finish(std::string summary)
    {
        if (outcome_.pass) {
            outcome_.detail = std::move(summary);
        }
        return outcome_;
    }

private:
    Outcome outcome_;
};

Json demo(const std::string& name)
{
    const auto result = run_command({"demo", name});
    return Json::parse(result.output);
}

const Json* find_target(const Json& result, const std::string& name)
{
    for (const auto& t : result.at("targets")) {
        if (t.at("name") == name) {
            return &t;
        }
    }
    return nullptr;
}

bool ladder_infeasible(const Json& target, std::size_t from, std::size_t to)
{
    std::vector<bool> seen(to + 1, false);
    for (const auto& step : target.at("ladder")) {
        const std::size_t d = step.at("degree");
        if (d >= from && d <= to) {
            if (step.at("status") != "infeasible-within-bound") {
                return false;
            }
            seen[d] = true;
        }
    }
    for (std::size_t d = from; d <= to; ++d) {
        if (!seen[d]) {
            return false;
        }
    }
    return true;
}

Outcome double_point()
{
    Check c;
    const Json report = demo("double-point");
    const Json& r = report.at("payload").at("result");
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const Ideal on_x(cross, polys(cross, {"x"}));
    const Ideal on_y(cross, polys(cross, {"y"}));
    c.require(r.at("der_pi").at("degree_bound") == 3, "Der_pi basis not computed at d = 3");
    std::size_t n = 0;
    for (const auto& b : r.at("der_pi").at("basis")) {
        c.require(ideal_member(on_x, poly(cross, b.at("x"))), "basis element with D(x) outside <x>");
        c.require(ideal_member(on_y, poly(cross, b.at("y"))), "basis element with D(y) outside <y>");
        ++n;
    }
    c.require(n > 0, "empty Der_pi basis");
    const Json* scaling = find_target(r, "x*d/dx");
    const Json* shift = find_target(r, "d/dx");
    c.require(scaling && scaling->at("verdict") == "liftable", "x*d/dx not liftable");
    c.require(shift && shift->at("verdict") == "infeasible-within-bound" && ladder_infeasible(*shift, 1, 6),
              "d/dx not infeasible for every d = 1..6");
    return c.finish("Der_pi basis (" + std::to_string(n) + " elements) on the axes; x*d/dx liftable; d/dx "
                    "infeasible for d = 1..6");
}

Outcome usb2()
{
    Check c;
    const Json report = demo("usb2");
    const Json& r = report.at("payload").at("result");
    c.require(r.at("hom").at("check") == true, "check_hom failed");
    c.require(r.at("hom").at("images") == Json::parse(R"({"H": "x", "E": "0"})"), "unexpected hom images");
    const Json* scaling = find_target(r, "x*d/dx");
    c.require(scaling && scaling->at("verdict") == "infeasible-within-bound" && ladder_infeasible(*scaling, 1, 4),
              "x*d/dx not infeasible for every d = 1..4");
    c.require(r.at("pushforwards").at(0).at("name") == "ad_H" &&
                  r.at("pushforwards").at(0).at("pushforward").at("x") == "0",
              "pushforward of [H, .] is not 0");
    return c.finish("check_hom true; x*d/dx infeasible for d = 1..4; pushforward of [H, .] = 0");
}

Outcome dual_numbers()
{
    Check c;
    const auto t = fixture::ring("T", {"t"});
    const auto dual = fixture::quotient("D", {"e"}, {"e^2"});
    const AlgebraHom pi(t, dual, polys(dual, {"e"}), polys(t, {"t"}));
    const Ideal kernel(t, polys(t, {"t^2"}));
    SolveOptions options;
    options.preserve = kernel;
    options.pushforward = PushforwardConstraint{pi, Derivation(dual, polys(dual, {"e"}))};
    const auto lift = solve_derivations(t, 2, options);
    c.require(lift.particular.has_value() && lift.particular->image(0) == poly(t, "t"),
              "particular solution is not D(t) = t");
    SolveOptions preserve;
    preserve.preserve = kernel;
    const auto der_pi = solve_derivations(t, 2, preserve);
    for (const auto& d : der_pi.basis) {
        c.require(d.image(0).constant_term().is_zero(), "Der_pi basis element with D(t)(0) != 0");
    }
    const Json report = demo("dual-numbers");
    const Json* target = find_target(report.at("payload").at("result"), "e*d/de");
    c.require(target && target->at("lift").at("t") == "t", "demo lift is not D(t) = t");
    return c.finish("lift D(t) = t; " + std::to_string(der_pi.dimension()) +
                    " Der_pi basis elements, all with zero constant term");
}

Outcome free_algebra()
{
    Check c;
    std::mt19937_64 rng(2024);
    const auto f = Algebra::free("F", {"x", "y"});
    const auto plane = fixture::ring("P", {"x", "y"});
    const AlgebraHom pi(f, plane, polys(plane, {"x", "y"}), polys(f, {"x", "y"}));
    const Ideal kernel(f, polys(f, {"x*y - y*x"}));
    for (int n = 0; n < 20; ++n) {
        const Polynomial a = oracle::random_polynomial(plane, rng, 3, 4);
        const Polynomial b = oracle::random_polynomial(plane, rng, 3, 4);
        const Derivation target(plane, {a, b});
        const auto lifted = free_lift(pi, target);
        c.require(pi.apply(lifted.image(0)) == a && pi.apply(lifted.image(1)) == b, "lift images differ");
        c.require(equivalent(pushforward(lifted, pi, kernel), target), "pushforward differs from target");
    }
    // Words of length <= 3 in two letters, by enumeration.
    std::size_t words = 0;
    std::vector<std::string> level{""};
    for (int len = 0; len <= 3; ++len) {
        words += level.size();
        std::vector<std::string> next;
        for (const auto& w : level) {
            next.push_back(w + "x");
            next.push_back(w + "y");
        }
        level = next;
    }
    const std::size_t dim = solve_derivations(f, 3).dimension();
    c.require(words == 15 && dim == 2 * words, "dimension " + std::to_string(dim) + " != 2 * " +
                                                   std::to_string(words));
    return c.finish("20 random targets reproduced; dim at d = 3 is " + std::to_string(dim) + " = 2 * " +
                    std::to_string(words));
}

Outcome kappa_minkowski()
{
    Check c;
    const Json report = demo("kappa-minkowski");
    const Json& r = report.at("payload").at("result");
    const Json& ax = r.at("axioms");
    c.require(r.at("order") == 2, "order is not 2");
    c.require(ax.at("probe_degree") == 3 && ax.at("exhaustive") == true, "probe degree is not 3");
    c.require(ax.at("unit_left") == true && ax.at("unit_right") == true, "unit axiom failed");
    c.require(ax.at("associative") == true, "associativity failed");
    c.require(ax.at("c1_antisymmetric") == true, "C_1 not antisymmetric");
    c.require(ax.at("extracted_bracket").at(0).at("value") == "y", "extracted bracket is not {x,y} = y");
    c.require(r.at("tangentiality").at("tangential") == true && r.at("tangentiality").at("degree_bound") == 4,
              "not tangential to <y> at d = 4");
    c.require(r.at("commutators").at(0).at("value") == "h*(2*i*y)", "report commutator is not 2ihy");
    const auto ring = fixture::ring("R", {"x", "y"}, ScalarField::gaussian);
    const auto s = exp_star(VectorField(ring, polys(ring, {"1", "0"})), VectorField(ring, polys(ring, {"0", "y"})), 2);
    const auto xy = star_multiply(s, poly(ring, "x"), poly(ring, "y"));
    const auto yx = star_multiply(s, poly(ring, "y"), poly(ring, "x"));
    const auto expected = parse_series("2*i*h*y", ring, 2);
    for (std::size_t k = 0; k <= 2; ++k) {
        c.require(xy[k] - yx[k] == expected[k], "x*y - y*x differs from 2ihy");
    }
    return c.finish("unit, associativity (p = 3), C_1 antisymmetry, {x,y} = y, tangential to <y> at d = 4, "
                    "x*y - y*x = 2ihy");
}

Outcome obstruction()
{
    Check c;
    const auto r = fixture::ring("R", {"x", "y"});
    const auto line = fixture::ring("L", {"x"});
    const PoissonStructure p(r, {{{0, 1}, poly(r, "y")}});
    const AlgebraHom quotient(r, line, polys(line, {"x", "0"}), polys(r, {"x"}));
    const Ideal axis(r, polys(r, {"y"}));
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto scaling =
            solve_poisson_vector_fields(p, d, PoissonRestriction{axis, quotient, VectorField(line, polys(line, {"x"}))});
        c.require(scaling.status == SolveStatus::infeasible_within_bound,
                  "x*d/dx feasible at d = " + std::to_string(d));
        const auto constant =
            solve_poisson_vector_fields(p, d, PoissonRestriction{axis, quotient, VectorField(line, polys(line, {"1"}))});
        c.require(constant.feasible(), "d/dx infeasible at d = " + std::to_string(d));
    }
    return c.finish("x*d/dx infeasible for d = 1..5; d/dx feasible");
}

Outcome order1()
{
    Check c;
    const auto ring = fixture::ring("R", {"x", "y"}, ScalarField::gaussian);
    const auto s = exp_star(VectorField(ring, polys(ring, {"1", "0"})), VectorField(ring, polys(ring, {"0", "y"})), 1);
    std::ostringstream dims;
    for (unsigned d = 1; d <= 3; ++d) {
        const auto report = solve_order1_derivations(s, d);
        c.require(report.dimensions_match(), "dimension identity fails at d = " + std::to_string(d));
        c.require(report.field_dimension == oracle::plane_field_dimension(d), "field dimension differs from oracle");
        c.require(report.poisson_dimension == oracle::kappa_poisson_dimension(d),
                  "Poisson dimension differs from oracle");
        c.require(report.dimension() == oracle::kappa_order1_dimension(d), "total dimension differs from oracle");
        dims << (d > 1 ? ", " : "") << report.dimension() << " = " << report.poisson_dimension << " + "
             << report.field_dimension;
    }
    return c.finish("d = 1..3: " + dims.str());
}

Outcome tamper()
{
    Check c;
    const auto ring = fixture::ring("R", {"x", "y"}, ScalarField::gaussian);
    const auto s = exp_star(VectorField(ring, polys(ring, {"1", "0"})), VectorField(ring, polys(ring, {"0", "y"})), 2);
    const auto report = check_star_axioms(s.with_operator(2, BidiffOperator(ring)), 3);
    c.require(!report.associative, "tampered product passes associativity");
    bool found = false;
    for (const auto& f : report.associativity_failures) {
        if (f.f == Monomial{0, 0} && f.g == Monomial{1} && f.h == Monomial{1}) {
            found = f.order == 2 && f.left == poly(ring, "-2*y^2") && f.right.is_zero();
        }
    }
    c.require(found, "witness (x^2, y, y) with h^2 defect -2y^2 on the left not reported");
    return c.finish("fails associativity; (x^2, y, y): left h^2 coefficient -2*y^2, right 0");
}

Outcome correspondence()
{
    Check c;
    const std::vector<AlgebraPtr> algebras{fixture::quotient("A", {"x", "y"}, {"x*y"}),
                                           fixture::quotient("D", {"e"}, {"e^2"}),
                                           fixture::quotient("C", {"x", "y"}, {"x^2 + y^2 - 1"})};
    std::ostringstream dims;
    for (const auto& a : algebras) {
        const auto corr = hom_der_correspondence(kaehler_presentation(a), 2);
        const auto solved = solve_derivations(a, 2).basis;
        c.require(same_span(corr.derivations, solved), "spans differ on " + a->name());
        dims << (dims.tellp() > 0 ? ", " : "") << a->name() << ": " << solved.size();
    }
    return c.finish("same span at d = 2 (" + dims.str() + ")");
}

Outcome properties()
{
    Check c;
    std::mt19937_64 rng(7);
    const int cases = 200;
    const auto cross = fixture::quotient("A", {"x", "y"}, {"x*y"});
    const auto circle = fixture::quotient("C", {"x", "y"}, {"x^2 + y^2 - 1"});
    const auto u = fixture::usb2();
    const auto weyl = fixture::presented("W", AlgebraKind::pbw, {"x", "D"}, {"D*x - x*D - 1"});

    // Leibniz for solved derivations across fixtures.
    const std::vector<AlgebraPtr> leibniz_algebras{cross, circle, u};
    std::vector<std::vector<Derivation>> bases;
    for (const auto& a : leibniz_algebras) {
        bases.push_back(solve_derivations(a, 2).basis);
    }
    for (int n = 0; n < cases; ++n) {
        const std::size_t k = static_cast<std::size_t>(n) % leibniz_algebras.size();
        const auto& a = leibniz_algebras[k];
        Derivation d = Derivation::zero(a);
        for (const auto& b : bases[k]) {
            d += b * oracle::random_scalar(rng, false);
        }
        const Polynomial p = oracle::random_polynomial(a, rng, 3, 3);
        const Polynomial q = oracle::random_polynomial(a, rng, 3, 3);
        c.require(reduce_relations(d.apply(p * q) - d.apply(p) * q - p * d.apply(q)).is_zero(), "Leibniz");
    }

    // Antisymmetry and Jacobi for Poisson brackets.
    const auto r3 = fixture::ring("S", {"x", "y", "z"});
    const PoissonStructure so3(r3, {{{0, 1}, poly(r3, "z")}, {{1, 2}, poly(r3, "x")}, {{0, 2}, poly(r3, "-y")}});
    for (int n = 0; n < cases; ++n) {
        const Polynomial f = oracle::random_polynomial(r3, rng, 3, 3);
        const Polynomial g = oracle::random_polynomial(r3, rng, 3, 3);
        const Polynomial h = oracle::random_polynomial(r3, rng, 2, 3);
        c.require(so3.bracket(f, g) == -so3.bracket(g, f), "antisymmetry");
        c.require(jacobiator(so3, f, g, h).is_zero(), "Jacobi");
    }

    // Normal forms are idempotent and multiplicative.
    const std::vector<AlgebraPtr> pbw{u, weyl};
    for (int n = 0; n < cases; ++n) {
        const auto& a = pbw[static_cast<std::size_t>(n) % pbw.size()];
        const auto cover = Algebra::free("cover", a->generators());
        const Polynomial w = oracle::random_polynomial(cover, rng, 4, 4);
        const Terms once = a->normal_form(w.terms());
        c.require(a->normal_form(once) == once, "normal form not idempotent");
    }

    // Parse/print round trip.
    const std::vector<AlgebraPtr> printable{cross, u, Algebra::free("F", {"a", "b"}),
                                            fixture::ring("G", {"x", "y"}, ScalarField::gaussian)};
    for (int n = 0; n < cases; ++n) {
        const auto& a = printable[static_cast<std::size_t>(n) % printable.size()];
        const Polynomial p = oracle::random_polynomial(a, rng, 4, 5);
        c.require(parse_polynomial(format_polynomial(p), a) == p, "round trip: " + format_polynomial(p));
    }

    // Inner derivations push forward to inner derivations.
    const auto line = fixture::ring("L", {"x"});
    const AlgebraHom pi(u, line, polys(line, {"x", "0"}), polys(u, {"H"}));
    const Ideal kernel(u, polys(u, {"E"}));
    const auto f = Algebra::free("F", {"x", "y"});
    const auto plane = fixture::ring("P", {"x", "y"});
    const AlgebraHom to_plane(f, plane, polys(plane, {"x", "y"}), polys(f, {"x", "y"}));
    const Ideal commutators(f, polys(f, {"x*y - y*x"}));
    for (int n = 0; n < cases; ++n) {
        const bool first = n % 2 == 0;
        const AlgebraHom& map = first ? pi : to_plane;
        const Polynomial x = oracle::random_polynomial(map.domain(), rng, 2, 3);
        c.require(equivalent(pushforward(Derivation::inner(x), map, first ? kernel : commutators),
                             Derivation::inner(map.apply(x))),
                  "inner pushforward");
    }
    return c.finish("Leibniz, antisymmetry, Jacobi, normal forms, round trip, inner pushforward: " +
                    std::to_string(cases) + " cases each");
}

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "double point", 2000, double_point},
        {2, "enveloping algebra of [H,E] = E", 5000, usb2},
        {3, "dual numbers", 1000, dual_numbers},
        {4, "free algebra", 2000, free_algebra},
        {5, "kappa-Minkowski star", 5000, kappa_minkowski},
        {6, "Poisson extension obstruction", 3000, obstruction},
        {7, "order-1 derivations", 5000, order1},
        {8, "associativity falsification", 1000, tamper},
        {9, "Kaehler correspondence", 3000, correspondence},
        {10, "property suites", 30000, properties},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = ms <= c.limit_ms;
        const bool pass = outcome.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %2d %-32s %8.1f ms (limit %.0f ms)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), ms,
                    c.limit_ms, outcome.detail.c_str(), in_time ? "" : " [over time limit]");
    }
    std::printf("%s: %zu criteria, %d failed\n", failures == 0 ? "PASS" : "FAIL", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
