#pragma once

#include <gtest/gtest.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/decompose.hpp"
#include "deltafilt/filt.hpp"
#include "deltafilt/hsys.hpp"
#include "deltafilt/homology.hpp"
#include "deltafilt/quiver.hpp"
#include "deltafilt/representation.hpp"
#include "generators.hpp"

namespace testsupport {

using namespace deltafilt;

#define EXPECT_ERRC(stmt, errc)                                   \
  do {                                                            \
    try {                                                         \
      stmt;                                                       \
      ADD_FAILURE() << "expected " << errc_name(errc);            \
    } catch (const ::deltafilt::Error& e) {                       \
      EXPECT_EQ(e.code(), errc) << e.what();                      \
    }                                                             \
  } while (0)

/// Builds a representation from per-vertex dims and named arrow matrices.
inline Representation rep(const Algebra& alg, std::vector<std::size_t> dims,
                          const std::map<std::string, std::vector<std::vector<std::int64_t>>>& maps = {}) {
  Representation m = zero_maps(alg, std::move(dims));
  for (const auto& [name, rows] : maps) {
    const std::size_t a = alg.quiver().arrow_index(name);
    const auto& arr = alg.quiver().arrow(a);
    m.maps[a] = Mat::from_rows(alg.field(), rows, m.dims[arr.source]);
  }
  require_valid(alg, m);
  return m;
}

/// Submodule spanned per vertex by the given column vectors.
inline Submodule sub(const Algebra& alg, const Representation& m,
                     const std::vector<std::vector<std::vector<Elem>>>& cols) {
  Submodule s;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    s.spaces.push_back(Subspace::span(Mat::from_columns(alg.field(), m.dims[v], cols[v])));
  require_submodule(alg, m, s);
  return s;
}

inline std::vector<std::size_t> dims_of(const Decomposition& d) {
  std::vector<std::size_t> total;
  for (const auto& s : d.summands) {
    if (total.empty()) total.assign(s.rep.dims.size(), 0);
    for (std::size_t v = 0; v < s.rep.dims.size(); ++v) total[v] += s.rep.dims[v];
  }
  return total;
}

}  // namespace testsupport
