#include "bcolor/search.hpp"

#include "bcolor/error.hpp"

#include <cassert>

namespace bcolor {

BSpectrumReport b_spectrum(const Graph &g, const SearchOptions &options) {
  if (g.vertex_count() == 0)
    throw InputError("b-spectrum is undefined for the empty graph");

  BSpectrumReport report;
  ChromaticResult chromatic = chromatic_number(g);
  report.chi = chromatic.chi;
  report.upper_bound = m_degree_bound(g);

  // every chi-colouring is colorful, so the chromatic witness serves for k = chi
  assert(is_colorful(g, chromatic.witness));
  report.spectrum.insert(report.chi);
  report.witnesses.emplace(report.chi, std::move(chromatic.witness));

  for (std::size_t k = report.chi + 1; k <= report.upper_bound; ++k) {
    SearchResult result = find_colorful_coloring(g, k, options);
    report.nodes += result.nodes;
    switch (result.status) {
    case SearchStatus::Found:
      report.spectrum.insert(k);
      report.witnesses.emplace(k, std::move(*result.coloring));
      break;
    case SearchStatus::BudgetExceeded:
      report.unknown.insert(k);
      break;
    case SearchStatus::NotExists:
      break;
    }
  }

  report.b = *report.spectrum.rbegin();
  if (report.unknown.empty())
    report.continuous = report.spectrum.size() == report.b - report.chi + 1;
  return report;
}

} // namespace bcolor
