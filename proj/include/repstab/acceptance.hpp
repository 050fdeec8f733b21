#pragma once

#include <ostream>
#include <string>

namespace repstab {

// Runs the acceptance suite, printing one line per criterion. Returns the
// number of failed criteria. golden_dir holds the recorded fixture data.
int run_acceptance(std::ostream& out, const std::string& golden_dir);

}  // namespace repstab
