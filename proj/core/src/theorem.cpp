#include "k3cliff/theorem.hpp"

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace k3cliff {

std::string to_string(QueryKind kind) {
  return kind == QueryKind::CliffordRealization ? "clifford-realization"
                                                : "gonality-realization";
}

BrillNoetherBounds brill_noether_bounds(const Int& genus) {
  if (genus < 2) throw RangeError("brill_noether_bounds requires genus >= 2, got " +
                                  genus.str());
  return {(genus + 3) / 2, (genus - 1) / 2};
}

void TheoremQuery::validate() const {
  if (genus < 3)
    throw RangeError(to_string(kind) + " requires genus >= 3, got " + genus.str());
  const BrillNoetherBounds b = brill_noether_bounds(genus);
  if (kind == QueryKind::CliffordRealization) {
    if (target < 0 || target > b.max_cliff)
      throw RangeError("clifford index must satisfy 0 <= c <= floor((g-1)/2) = " +
                       b.max_cliff.str() + " at genus " + genus.str() + ", got " +
                       target.str());
  } else {
    if (target < 2 || target > b.max_gonality)
      throw RangeError("gonality must satisfy 2 <= k <= floor((g+3)/2) = " +
                       b.max_gonality.str() + " at genus " + genus.str() + ", got " +
                       target.str());
  }
}

namespace {

RealizationCertificate realize(const TheoremQuery& query) {
  query.validate();
  const Int d = query.kind == QueryKind::CliffordRealization ? query.target + 2
                                                             : query.target;
  SurfaceModel surface = make_surface(query.genus, d);
  RealizationCertificate cert{query, surface, minimum_clifford(surface),
                              nef_certificate(surface),
                              base_point_free_certificate(surface)};
  if (query.kind == QueryKind::CliffordRealization &&
      cert.clifford.min_cliff != query.target)
    throw VerificationError("realized clifford index " + cert.clifford.min_cliff.str() +
                            " differs from requested " + query.target.str());
  if (query.kind == QueryKind::GonalityRealization &&
      cert.clifford.gonality != query.target)
    throw VerificationError("realized gonality " + cert.clifford.gonality.str() +
                            " differs from requested " + query.target.str());
  return cert;
}

RealizationRow row_from(const RealizationCertificate& cert) {
  return {cert.query.genus,
          cert.query.kind,
          cert.query.target,
          cert.surface.degree(),
          cert.clifford.min_cliff,
          cert.clifford.gonality,
          cert.clifford.oracle_agrees,
          cert.bpf.holds,
          cert.nef.holds(),
          cert.clifford.convention_branch};
}

void enforce_bounds(const RealizationRow& row) {
  const BrillNoetherBounds b = brill_noether_bounds(row.genus);
  const bool ok = row.min_cliff >= 0 && row.min_cliff <= b.max_cliff &&
                  row.gonality == row.min_cliff + 2 && row.gonality >= 2 &&
                  row.gonality <= b.max_gonality;
  if (!ok)
    throw VerificationError("certificate at (g, d) = (" + row.genus.str() + ", " +
                            row.d.str() + ") violates the genus bounds");
}

// Evaluates fn(i) for i in [0, n) on a few worker threads; slots make the
// result order independent of completion order.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

RealizationCertificate realize_clifford(const Int& genus, const Int& cliff) {
  return realize({QueryKind::CliffordRealization, genus, cliff});
}

RealizationCertificate realize_gonality(const Int& genus, const Int& gonality_target) {
  return realize({QueryKind::GonalityRealization, genus, gonality_target});
}

RealizationTable sweep(const Int& genus_min, const Int& genus_max) {
  if (genus_min < 3)
    throw RangeError("sweep requires genus-min >= 3, got " + genus_min.str());
  if (genus_min > genus_max)
    throw RangeError("sweep requires genus-min <= genus-max, got [" + genus_min.str() +
                     ", " + genus_max.str() + "]");

  std::vector<TheoremQuery> queries;  // already in (genus, kind, target) order
  for (Int g = genus_min; g <= genus_max; ++g) {
    const BrillNoetherBounds b = brill_noether_bounds(g);
    for (Int c = 0; c <= b.max_cliff; ++c)
      queries.push_back({QueryKind::CliffordRealization, g, c});
    for (Int k = 2; k <= b.max_gonality; ++k)
      queries.push_back({QueryKind::GonalityRealization, g, k});
  }

  RealizationTable table{genus_min, genus_max, {}};
  table.rows.resize(queries.size());
  parallel_for_index(queries.size(), [&](std::size_t i) {
    const RealizationRow row = row_from(realize(queries[i]));
    enforce_bounds(row);
    table.rows[i] = row;
  });
  return table;
}

}  // namespace k3cliff
