#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nlmf/experiment.hpp"

namespace nlmf {

// Shortest decimal that round-trips to the same double. Locale-independent.
std::string format_double(double v);

// Columns: iteration, msd, msd_db. Rows newline-terminated.
void write_msd_total_csv(std::ostream& os, const MsdTrace& trace);

// Columns: iteration, node, msd.
void write_msd_per_node_csv(std::ostream& os, const MsdTrace& trace);

// Columns: iteration, algorithm, msd_db; one block per labeled trace.
void write_compare_csv(std::ostream& os,
                       const std::vector<std::pair<std::string, MsdTrace>>& traces);

}  // namespace nlmf
