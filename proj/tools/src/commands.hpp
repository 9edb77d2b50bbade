#pragma once

#include "io.hpp"

#include "heartglue/glue.hpp"

#include <optional>
#include <string>

namespace heartglue::cli {

enum class Format { Text, Json };

struct Job {
  std::string command;
  std::string algebra;               // path or corpus name; may be empty for remark-counterexamples
  std::optional<std::string> objects;
  int window = 0;                    // 0 selects the default window
  bool weak = false;                 // check-exceptional: skip the strongness test
};

struct Report {
  json data;
  std::string text;
  int status = 0;  // 0 pass, 1 check failure
};

const std::vector<std::string>& command_names();

// Throws InputError on unreadable or invalid input.
Report run_job(const Job& job);

Report ext_table(const LoadedAlgebra& a, const ObjectSet& objs, Window w);
Report check_exceptional_cmd(const LoadedAlgebra& a, const ObjectSet& objs, Window w, bool strong);
Report glue_hearts(const LoadedAlgebra& a, const ObjectSet& objs, Window w);
Report dim_formula(const LoadedAlgebra& a, const ObjectSet& objs, Window w);
Report yoneda_oracle(const LoadedAlgebra& a, const ObjectSet& objs, int max_degree);
Report bondal_check(const LoadedAlgebra& a, const ObjectSet& objs, Window w);
Report remark_counterexamples(Window w);

std::string render(const Report& r, Format f);

}  // namespace heartglue::cli
