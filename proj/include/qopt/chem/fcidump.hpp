#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qopt/chem/integrals.hpp"

namespace qopt::chem {

/// Parses FCIDUMP text. Body lines are "value i j k l" with 1-based indices:
/// four nonzero indices give chemist (ij|kl), "i j 0 0" gives h_ij and
/// "0 0 0 0" the core energy. Lines "i 0 0 0" (orbital energies) are ignored.
///
/// Throws HeaderError when NORB or NELEC is missing, ParseError on malformed
/// lines and IndexError on indices outside [0, NORB].
MolecularIntegrals parse_fcidump(std::string_view text);

MolecularIntegrals read_fcidump(const std::filesystem::path& path);

/// Serializes unique chemist integrals above `threshold`; round-trips through
/// parse_fcidump.
std::string write_fcidump(const MolecularIntegrals& ints, double threshold = 1e-14);

}  // namespace qopt::chem
