#pragma once

#include <cstdint>
#include <vector>

#include "knapcrack/instance.hpp"
#include "knapcrack/rng.hpp"

namespace knapcrack {

struct GaParams {
  std::size_t population_size = 50;
  double crossover_rate = 2.0;  // percent of the population paired per generation
  double mutation_rate = 0.6;   // per-chromosome chance of a single bit flip
  std::size_t max_generations = 1000;
  std::uint64_t seed = 0;
  bool stop_on_first = false;   // stop at the first exact hit instead of collecting
};

// Throws ValidationError when a field is out of range.
void validate(const GaParams& params);

// Exact hits carry the sentinel 101 and the flag; everything else scores
// 100/diff, which caps at 100 and stays strictly below the sentinel.
struct FitnessValue {
  double value = 0.0;
  bool is_solution = false;
};

using Population = std::vector<Chromosome>;

struct RunResult {
  SolutionSet solutions;  // every distinct exact hit seen across all generations
  std::size_t generations_executed = 0;
  std::vector<double> best_fitness_history;  // per-generation max fitness
  GaParams params;
};

// population_size chromosomes of length n, each bit an independent coin flip.
Population init_population(std::size_t n, const GaParams& params);

FitnessValue fitness(std::uint64_t diff) noexcept;

std::vector<FitnessValue> evaluate_population(const Population& population,
                                              const Instance& instance);

// Fitness-proportional sampling with replacement; same size out as in.
Population roulette_select(const Population& population,
                           const std::vector<FitnessValue>& fitnesses, Rng& rng);

// floor(rate/100 * size) individuals, rounded down to even, are drawn without
// replacement and paired for single-point tail exchange; the rest pass
// through. The rate is read to basis-point precision so integer percentages
// never fall on a floating-point boundary.
Population crossover(const Population& population, double crossover_rate, Rng& rng);

// Each chromosome independently gets exactly one uniformly chosen bit
// flipped with probability mutation_rate.
Population mutate(const Population& population, double mutation_rate, Rng& rng);

// evaluate -> select -> crossover -> mutate until the generation cap, or
// until the first hit when stop_on_first is set. Deterministic given seed.
RunResult run_ga(const Instance& instance, const GaParams& params);

}  // namespace knapcrack
