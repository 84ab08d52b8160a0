// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/random.hpp"

#include <bit>
#include <cmath>

#include "spectral_optim/error.hpp"

namespace spo {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform_open_closed() {
  return static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv; }

std::size_t Rng::below(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

ProductFamily generate_random_family(std::size_t d, std::size_t n,
                                     DensityInterval density, std::uint64_t seed,
                                     FamilyKind kind) {
  if (d == 0 || n == 0) {
    throw Error(ErrorCode::InvalidArgument, "d and N must be >= 1");
  }
  if (kind == FamilyKind::Polyhedral) return generate_polyhedral_family(d, n, seed);
  if (kind == FamilyKind::Sparse &&
      !(density.lo > 0.0 && density.lo <= density.hi && density.hi <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "density interval must satisfy 0 < lo <= hi <= 1");
  }
  Rng rng(seed);
  ProductFamily f;
  f.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    const double gamma =
        kind == FamilyKind::Sparse ? rng.uniform(density.lo, density.hi) : 1.0;
    std::vector<Vector> rows(n, Vector(d, 0.0));
    for (auto& row : rows) {
      bool any = false;
      for (double& x : row) {
        if (kind == FamilyKind::Positive || rng.uniform() < gamma) {
          x = rng.uniform_open_closed();
          any = true;
        }
      }
      if (!any) row[0] = rng.uniform_open_closed();
    }
    f.sets.push_back(RowSet::finite(std::move(rows)));
  }
  return f;
}

ProductFamily generate_polyhedral_family(std::size_t d, std::size_t n,
                                         std::uint64_t seed) {
  Rng rng(seed);
  ProductFamily f;
  f.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vector> normals(n, Vector(d));
    for (auto& b : normals) {
      for (double& x : b) x = rng.uniform_open_closed();
      const double len = norm2(b);
      for (double& x : b) x /= len;
    }
    f.sets.push_back(RowSet::halfspace_poly(d, std::move(normals)));
  }
  return f;
}

ProductFamily generate_ellipsoid_family(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  ProductFamily f;
  f.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vector center(d), axes(d);
    for (double& c : center) c = rng.uniform(1.0, 2.0);
    for (double& a : axes) a = rng.uniform(0.5, 1.5);
    f.sets.push_back(RowSet::ellipsoid(std::move(center), 0.4, std::move(axes)));
  }
  return f;
}

}  // namespace spo
