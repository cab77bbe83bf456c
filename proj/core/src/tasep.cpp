#include "tetralat/tasep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tetralat/error.hpp"
#include "tetralat/pfunc.hpp"
#include "tetralat/symfun.hpp"

namespace tetralat {

int TasepSector::sites() const { return std::accumulate(counts.begin(), counts.end(), 0); }

TasepSector TasepSector::of_config(int species, const TasepConfig& config) {
  TasepSector s;
  s.species = species;
  s.counts.assign(static_cast<std::size_t>(species) + 1, 0);
  for (int v : config) {
    if (v < 0 || v > species) fail(Errc::OutOfRange, "species label out of range");
    ++s.counts[static_cast<std::size_t>(v)];
  }
  return s;
}

std::string config_to_string(const TasepConfig& c) {
  std::ostringstream os;
  for (int v : c) os << v;
  return os.str();
}

std::vector<TasepConfig> sector_configs(const TasepSector& sector) {
  if (static_cast<int>(sector.counts.size()) != sector.species + 1)
    fail(Errc::OutOfRange, "sector needs species+1 multiplicities");
  int L = sector.sites();
  if (L < 2) fail(Errc::EmptySector, "sector needs at least two sites");
  TasepConfig base;
  for (int v = 0; v <= sector.species; ++v)
    base.insert(base.end(), static_cast<std::size_t>(sector.counts[static_cast<std::size_t>(v)]),
                v);
  std::vector<TasepConfig> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

RationalMatrix build_generator(const TasepSector& sector) {
  auto configs = sector_configs(sector);
  int N = static_cast<int>(configs.size());
  if (N == 0) fail(Errc::EmptySector, "empty sector");
  std::map<TasepConfig, int> index;
  for (int c = 0; c < N; ++c) index[configs[static_cast<std::size_t>(c)]] = c;

  RationalMatrix H;
  H.rows = H.cols = N;
  H.a.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), Rational(0));
  int L = sector.sites();
  for (int c = 0; c < N; ++c) {
    const TasepConfig& sigma = configs[static_cast<std::size_t>(c)];
    int descents = 0;
    for (int i = 0; i < L; ++i) {
      int jn = (i + 1) % L;
      if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(jn)]) {
        ++descents;
        TasepConfig tau = sigma;
        std::swap(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(jn)]);
        H.at(index.at(tau), c) += Rational(1);
      }
    }
    H.at(c, c) -= Rational(descents);
  }
  return H;
}

namespace {

// Fraction-free (Bareiss) forward elimination on an integer copy of H; the
// generator entries are integers, so all intermediates stay integral.
std::vector<Rational> kernel_vector(const RationalMatrix& H) {
  int N = H.rows;
  std::vector<std::vector<Rational>> M(static_cast<std::size_t>(N),
                                       std::vector<Rational>(static_cast<std::size_t>(N)));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = H.at(r, c);

  std::vector<int> pivot_col;
  Rational prev_pivot(1);
  int row = 0;
  for (int col = 0; col < N && row < N; ++col) {
    int p = -1;
    for (int r = row; r < N; ++r)
      if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(M[static_cast<std::size_t>(row)], M[static_cast<std::size_t>(p)]);
    const Rational pivot = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int r = row + 1; r < N; ++r) {
      Rational factor = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      for (int c = col; c < N; ++c) {
        // Bareiss step: (pivot*a_rc - factor*a_pc) / previous pivot, exact.
        M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            (pivot * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
             factor * M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) /
            prev_pivot;
      }
    }
    prev_pivot = pivot;
    pivot_col.push_back(col);
    ++row;
  }
  int rank = row;
  if (rank != N - 1)
    fail(Errc::KernelDimension,
         "kernel dimension " + std::to_string(N - rank) + ", expected 1");

  // Single free column = the one not used as a pivot.
  std::vector<bool> is_pivot(static_cast<std::size_t>(N), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < N; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_col = c;

  std::vector<Rational> v(static_cast<std::size_t>(N), Rational(0));
  v[static_cast<std::size_t>(free_col)] = Rational(1);
  for (int r = rank - 1; r >= 0; --r) {
    int pc = pivot_col[static_cast<std::size_t>(r)];
    Rational s(0);
    for (int c = pc + 1; c < N; ++c)
      s += M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
           v[static_cast<std::size_t>(c)];
    v[static_cast<std::size_t>(pc)] =
        -s / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
  }
  return v;
}

}  // namespace

std::map<TasepConfig, Rational> steady_state_kernel(const TasepSector& sector) {
  auto configs = sector_configs(sector);
  RationalMatrix H = build_generator(sector);
  std::vector<Rational> v = kernel_vector(H);

  // normalize at the weakly decreasing configuration
  TasepConfig sorted_desc;
  for (int s = sector.species; s >= 0; --s)
    sorted_desc.insert(sorted_desc.end(),
                       static_cast<std::size_t>(sector.counts[static_cast<std::size_t>(s)]), s);
  Rational ref(0);
  for (std::size_t c = 0; c < configs.size(); ++c)
    if (configs[c] == sorted_desc) ref = v[c];
  if (ref.is_zero()) fail(Errc::KernelDimension, "kernel vanishes at the reference configuration");

  std::map<TasepConfig, Rational> out;
  for (std::size_t c = 0; c < configs.size(); ++c) out[configs[c]] = v[c] / ref;
  return out;
}

Rational steady_state_trace(const TasepSector& sector, const TasepConfig& config) {
  for (int s = 0; s <= sector.species; ++s)
    if (sector.counts[static_cast<std::size_t>(s)] == 0)
      fail(Errc::NotStabilized,
           "species " + std::to_string(s) + " absent: trace lies outside the finite class");
  if (TasepSector::of_config(sector.species, config).counts != sector.counts)
    fail(Errc::OutOfRange, "configuration not in the sector");

  OperatorWord word;
  word.model = Model::q0;
  word.n = sector.species;
  for (std::size_t p = 0; p < config.size(); ++p)
    word.factors.push_back(XFactor{config[p], var_indexed("tasep_z", static_cast<int>(p) + 1)});

  VarId q = var("q");
  TraceResult tr = plain_trace(word, 0, sector.sites() + 3, q);
  std::map<VarId, Rational> ones;
  for (std::size_t p = 0; p < config.size(); ++p)
    ones[var_indexed("tasep_z", static_cast<int>(p) + 1)] = Rational(1);
  return tr.value.evaluate(ones);
}

TasepConfig closed_form_config(int n, int j, int k, const std::vector<int>& block_sizes) {
  if (k + 1 < j) fail(Errc::OutOfRange, "closed form needs j <= k+1");
  if (static_cast<int>(block_sizes.size()) != n + 1)
    fail(Errc::OutOfRange, "need one block size per species 0..n");
  TasepConfig c;
  for (int s = n; s >= k + 1; --s)
    c.insert(c.end(), static_cast<std::size_t>(block_sizes[static_cast<std::size_t>(s)]), s);
  for (int s = j - 1; s >= 0; --s)
    c.insert(c.end(), static_cast<std::size_t>(block_sizes[static_cast<std::size_t>(s)]), s);
  for (int s = k; s >= j; --s)
    c.insert(c.end(), static_cast<std::size_t>(block_sizes[static_cast<std::size_t>(s)]), s);
  return c;
}

Rational steady_closed_form(int n, int j, int k, const std::vector<int>& block_sizes) {
  // j = k+1 degenerates to the empty partition (value 1)
  if (k + 1 < j) fail(Errc::OutOfRange, "closed form needs j <= k+1");
  if (static_cast<int>(block_sizes.size()) != n + 1)
    fail(Errc::OutOfRange, "need one block size per species 0..n");
  int high = 0, low = 0;
  for (int s = k + 1; s <= n; ++s) high += block_sizes[static_cast<std::size_t>(s)];
  for (int s = 0; s <= j - 1; ++s) low += block_sizes[static_cast<std::size_t>(s)];
  std::vector<int> parts(static_cast<std::size_t>(high), k + 1 - j);
  return schur_at_ones(Partition(parts), low + high);
}

}  // namespace tetralat
