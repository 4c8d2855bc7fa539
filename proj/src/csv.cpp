#include "nlmf/csv.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace nlmf {

std::string format_double(double v) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_msd_total_csv(std::ostream& os, const MsdTrace& trace) {
  os << "iteration,msd,msd_db\n";
  for (std::size_t n = 0; n < trace.iterations; ++n) {
    os << n << ',' << format_double(trace.total[n]) << ','
       << format_double(to_db(trace.total[n])) << '\n';
  }
}

void write_msd_per_node_csv(std::ostream& os, const MsdTrace& trace) {
  os << "iteration,node,msd\n";
  for (std::size_t n = 0; n < trace.iterations; ++n) {
    for (std::size_t k = 0; k < trace.nodes; ++k) {
      os << n << ',' << k << ',' << format_double(trace.at(k, n)) << '\n';
    }
  }
}

void write_compare_csv(std::ostream& os,
                       const std::vector<std::pair<std::string, MsdTrace>>& traces) {
  os << "iteration,algorithm,msd_db\n";
  for (const auto& [name, trace] : traces) {
    for (std::size_t n = 0; n < trace.iterations; ++n) {
      os << n << ',' << name << ',' << format_double(to_db(trace.total[n]))
         << '\n';
    }
  }
}

}  // namespace nlmf
