#include <benchmark/benchmark.h>

#include "cttqe/parser.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/rewrite.hpp"
#include "cttqe/valuate.hpp"
#include "../tests/support/gen.hpp"

using namespace cttqe;

namespace {

std::vector<Expr> bench_corpus(bool normal, std::size_t n) {
  testgen::Rng rng(0xBE7C);
  testgen::AtomPool pool = testgen::corpus_pool();
  std::vector<Expr> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(testgen::gen_any_eval_free(rng, pool, 5, normal));
  return out;
}

void BM_EncodeDecode(benchmark::State& state) {
  auto corpus = bench_corpus(false, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Expr& e = corpus[i++ % corpus.size()];
    benchmark::DoNotOptimize(decode(encode(e)));
  }
}
BENCHMARK(BM_EncodeDecode);

void BM_NormalizeDisquote(benchmark::State& state) {
  const Theory& th = standard_theory();
  auto corpus = bench_corpus(true, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Expr& e = corpus[i++ % corpus.size()];
    benchmark::DoNotOptimize(normalize(Expr::eval(Expr::quote(e), type_of(e)), th, 4096));
  }
}
BENCHMARK(BM_NormalizeDisquote);

void BM_NormalizeChainStep(benchmark::State& state) {
  const Theory& th = standard_theory();
  Expr e = parse_expr("make-implication '[ p:o => q:o ] '[ q:o ]");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(e, th, 4096));
}
BENCHMARK(BM_NormalizeChainStep);

void BM_Valuate(benchmark::State& state) {
  Model m;
  m.iota_size = 2;
  auto corpus = bench_corpus(true, 128);
  testgen::Rng rng(0xF00);
  testgen::AtomPool pool = testgen::corpus_pool();
  std::vector<Assignment> phis;
  for (const Expr& e : corpus)
    phis.push_back(testgen::gen_assignment(rng, m, possibly_free_vars(e), pool));
  std::size_t i = 0;
  for (auto _ : state) {
    std::size_t k = i++ % corpus.size();
    benchmark::DoNotOptimize(valuate(corpus[k], m, phis[k]));
  }
}
BENCHMARK(BM_Valuate);

void BM_ParsePrint(benchmark::State& state) {
  Parser p(standard_theory());
  auto corpus = bench_corpus(false, 256);
  std::vector<std::string> texts;
  for (const Expr& e : corpus) texts.push_back(print_expr(e));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.expr(texts[i++ % texts.size()]));
  }
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
