#include "coembed/algebra.hpp"
#include "coembed/commands.hpp"
#include "coembed/derivation.hpp"
#include "coembed/expression.hpp"
#include "coembed/ideal.hpp"
#include "coembed/poisson.hpp"
#include "coembed/starprod.hpp"

#include <benchmark/benchmark.h>

using namespace coembed;

namespace {

AlgebraPtr presented(const std::string& name, AlgebraKind kind, std::vector<std::string> gens,
                     const std::vector<std::string>& relations, ScalarField field = ScalarField::rational)
{
    const auto cover = Algebra::free(name, gens, field);
    AlgebraSpec spec{name, kind, field, std::move(gens), {}};
    for (const auto& r : relations) {
        spec.relations.push_back(parse_polynomial(r, cover).terms());
    }
    return Algebra::create(std::move(spec));
}

std::vector<Polynomial> polys(const AlgebraPtr& a, const std::vector<std::string>& src)
{
    std::vector<Polynomial> out;
    for (const auto& s : src) {
        out.push_back(parse_polynomial(s, a));
    }
    return out;
}

StarProduct kappa(std::size_t order)
{
    const auto r = Algebra::polynomial_ring("R", {"x", "y"}, ScalarField::gaussian);
    return exp_star(VectorField(r, polys(r, {"1", "0"})), VectorField(r, polys(r, {"0", "y"})), order);
}

void BM_GroebnerCyclic3(benchmark::State& state)
{
    const auto r = Algebra::polynomial_ring("R", {"x", "y", "z"});
    const auto gens = polys(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(groebner_basis(gens));
    }
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_PbwNormalForm(benchmark::State& state)
{
    const auto u = presented("U", AlgebraKind::pbw, {"H", "E"}, {"E*H - H*E + E"});
    const auto e = Polynomial::generator(u, 1);
    const auto h = Polynomial::generator(u, 0);
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.pow(n) * h.pow(n));
    }
}
BENCHMARK(BM_PbwNormalForm)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveDoublePoint(benchmark::State& state)
{
    const auto a = presented("A", AlgebraKind::commutative, {"x", "y"}, {"x*y"});
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_derivations(a, d));
    }
}
BENCHMARK(BM_SolveDoublePoint)->Arg(2)->Arg(4)->Arg(6);

void BM_SolveFreeAlgebra(benchmark::State& state)
{
    const auto f = Algebra::free("F", {"x", "y"});
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_derivations(f, d));
    }
}
BENCHMARK(BM_SolveFreeAlgebra)->Arg(2)->Arg(3);

void BM_Usb2Ladder(benchmark::State& state)
{
    const auto u = presented("U", AlgebraKind::pbw, {"H", "E"}, {"E*H - H*E + E"});
    const auto line = Algebra::polynomial_ring("L", {"x"});
    const AlgebraHom pi(u, line, polys(line, {"x", "0"}), polys(u, {"H"}));
    SolveOptions options;
    options.preserve = Ideal(u, polys(u, {"E"}));
    options.pushforward = PushforwardConstraint{pi, Derivation(line, polys(line, {"x"}))};
    for (auto _ : state) {
        for (std::size_t d = 1; d <= 4; ++d) {
            benchmark::DoNotOptimize(solve_derivations(u, d, options));
        }
    }
}
BENCHMARK(BM_Usb2Ladder);

void BM_PoissonFields(benchmark::State& state)
{
    const auto r = Algebra::polynomial_ring("R", {"x", "y"});
    const PoissonStructure p(r, {{{0, 1}, parse_polynomial("y", r)}});
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_poisson_vector_fields(p, d));
    }
}
BENCHMARK(BM_PoissonFields)->Arg(3)->Arg(5);

void BM_StarAxioms(benchmark::State& state)
{
    const auto s = kappa(static_cast<std::size_t>(state.range(0)));
    const unsigned probe = s.max_operator_order() + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_star_axioms(s, probe));
    }
}
BENCHMARK(BM_StarAxioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Order1Derivations(benchmark::State& state)
{
    const auto s = kappa(1);
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_order1_derivations(s, d));
    }
}
BENCHMARK(BM_Order1Derivations)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Demo(benchmark::State& state, const char* name)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_command({"demo", name}));
    }
}
BENCHMARK_CAPTURE(BM_Demo, double_point, "double-point")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Demo, usb2, "usb2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Demo, kappa_minkowski, "kappa-minkowski")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
