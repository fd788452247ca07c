#pragma once

#include <string>

#include "ce/code.hpp"

namespace ce {

// Text format: header line "n k r", then one signed Pauli string per line:
// n-k generators, k logical X operators, k logical Z operators.
std::string format_code_file(const StabilizerCode& code);
StabilizerCode parse_code_file(const std::string& text);

// Write-then-rename so a failed write never leaves a partial file.
void write_code_file(const StabilizerCode& code, const std::string& path);
StabilizerCode read_code_file(const std::string& path);

}  // namespace ce
