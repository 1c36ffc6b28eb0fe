#include "lxmod/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <gmpxx.h>

#include "lxmod/errors.hpp"

namespace lxmod {

namespace {

constexpr std::size_t kBlockLanes = 256;
constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 15;

// Scans [begin, end) and appends satisfying indices in order.
void scan_range(const gf::PackedSystem& system, kernels::EvalFn eval, std::uint64_t begin, std::uint64_t end,
                std::vector<std::uint64_t>& hits) {
  const std::uint32_t n = system.num_vars;
  const std::uint32_t p = system.modulus;
  std::vector<std::int32_t> block(std::max<std::size_t>(n, 1) * kBlockLanes);
  std::vector<std::uint8_t> pass(kBlockLanes);
  std::vector<std::uint32_t> digits = decode_candidate(begin, p, n);

  for (std::uint64_t start = begin; start < end; start += kBlockLanes) {
    const std::size_t lanes = static_cast<std::size_t>(std::min<std::uint64_t>(kBlockLanes, end - start));
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      for (std::uint32_t v = 0; v < n; ++v) block[v * kBlockLanes + lane] = static_cast<std::int32_t>(digits[v]);
      // Odometer step: the last variable turns fastest.
      for (std::uint32_t v = n; v-- > 0;) {
        if (++digits[v] < p) break;
        digits[v] = 0;
      }
    }
    eval(system, block.data(), kBlockLanes, lanes, pass.data());
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      if (pass[lane]) hits.push_back(start + lane);
    }
  }
}

std::uint64_t checked_space(std::uint32_t p, std::uint32_t n, std::uint64_t budget) {
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), p, n);
  if (space > mpz_class(static_cast<unsigned long>(budget))) throw BudgetExceeded(space.get_str(), budget);
  return space.get_ui();
}

LinearMap matrix_from_digits(const FieldSpec& field, std::size_t rows, std::size_t cols,
                             const std::vector<std::uint32_t>& digits, std::size_t offset) {
  std::vector<Scalar> e;
  e.reserve(rows * cols);
  for (std::size_t t = 0; t < rows * cols; ++t) e.push_back(Scalar::from_residue(field, digits[offset + t]));
  return LinearMap(field, rows, cols, std::move(e));
}

}  // namespace

std::string candidate_space_size(std::uint32_t modulus, std::uint32_t num_vars) {
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), modulus, num_vars);
  return space.get_str();
}

std::vector<std::uint32_t> decode_candidate(std::uint64_t index, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint32_t v = n; v-- > 0;) {
    digits[v] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return digits;
}

std::vector<std::uint64_t> solve_system(const gf::PackedSystem& system, const EnumerationOptions& options) {
  const std::uint64_t total = checked_space(system.modulus, system.num_vars, options.budget);
  const kernels::EvalFn eval = kernels::select(options.kernel);

  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));

  std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
  std::atomic<std::uint64_t> next{0};
  const auto work = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::uint64_t begin = c * kChunkSize;
      scan_range(system, eval, begin, std::min(total, begin + kChunkSize), per_chunk[c]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<std::uint64_t> hits;
  for (auto& chunk : per_chunk) hits.insert(hits.end(), chunk.begin(), chunk.end());
  return hits;
}

std::vector<CrossedMorphism> enumerate_morphisms(const CrossedModulePtr& source, const CrossedModulePtr& target,
                                                 const EnumerationOptions& options) {
  const gf::PolySystem system = gf::compile_morphism_system(*source, *target);
  const FieldSpec& field = source->field();
  const std::size_t nM = source->m_algebra().dim();
  const std::size_t nP = source->p_algebra().dim();
  const std::size_t nM2 = target->m_algebra().dim();
  const std::size_t nP2 = target->p_algebra().dim();

  std::vector<CrossedMorphism> out;
  for (const std::uint64_t index : solve_system(system.pack(), options)) {
    const auto digits = decode_candidate(index, system.modulus(), system.num_vars());
    CrossedMorphism f(source, target, matrix_from_digits(field, nM2, nM, digits, 0),
                      matrix_from_digits(field, nP2, nP, digits, nM2 * nM));
    if (!validate_crossed_morphism(f).ok()) {
      throw std::logic_error("enumeration kernel accepted a pair the morphism validator rejects");
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Derivation> enumerate_derivations(const CrossedMorphism& f, const EnumerationOptions& options) {
  const gf::PolySystem system = gf::compile_derivation_system(f);
  const FieldSpec& field = f.source().field();
  const std::size_t rows = f.target().m_algebra().dim();
  const std::size_t cols = f.source().p_algebra().dim();

  std::vector<Derivation> out;
  for (const std::uint64_t index : solve_system(system.pack(), options)) {
    const auto digits = decode_candidate(index, system.modulus(), system.num_vars());
    LinearMap d = matrix_from_digits(field, rows, cols, digits, 0);
    if (!is_f0_derivation(d, f).ok()) {
      throw std::logic_error("enumeration kernel accepted a map the derivation validator rejects");
    }
    out.emplace_back(f, std::move(d));
  }
  return out;
}

std::vector<std::vector<Vector>> enumerate_ideals(const LieAlgebra& L) {
  const FieldSpec& field = L.field();
  if (!field.is_prime()) throw UnsupportedField("finite field required to enumerate ideals");
  const std::uint32_t p = field.modulus();
  const std::size_t n = L.dim();

  std::vector<std::vector<Vector>> ideals;
  // Every subspace has a unique reduced row echelon basis: choose pivot
  // columns, then fill the free entries to the right of each pivot.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<std::vector<std::size_t>> pivot_sets;
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < n; ++c) {
        if (choose[c]) pivots.push_back(c);
      }
      pivot_sets.push_back(std::move(pivots));
    } while (std::prev_permutation(choose.begin(), choose.end()));

    for (const auto& pivots : pivot_sets) {
      // Free slots: (row r, column c) with c > pivot r and c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = pivots[r] + 1; c < n; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(r, c);
        }
      }
      const std::uint64_t count = std::stoull(candidate_space_size(p, static_cast<std::uint32_t>(slots.size())));
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto digits = decode_candidate(idx, p, static_cast<std::uint32_t>(slots.size()));
        std::vector<std::vector<Scalar>> rows(k, std::vector<Scalar>(n, Scalar::zero(field)));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = Scalar::one(field);
        for (std::size_t s = 0; s < slots.size(); ++s) {
          rows[slots[s].first][slots[s].second] = Scalar::from_residue(field, digits[s]);
        }
        std::vector<Vector> basis;
        for (auto& r : rows) basis.emplace_back(field, std::move(r));
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
          for (const auto& v : basis) {
            if (!coordinates_in(basis, L.bracket(L.basis(i), v))) {
              closed = false;
              break;
            }
          }
        }
        if (closed) ideals.push_back(std::move(basis));
      }
    }
  }
  return ideals;
}

}  // namespace lxmod
