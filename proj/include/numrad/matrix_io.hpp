#ifndef NUMRAD_MATRIX_IO_HPP
#define NUMRAD_MATRIX_IO_HPP

#include <string>

#include "numrad/matrix.hpp"

// Matrix JSON schema shared by the CLI and the file formats:
//   { "n": <int>, "entries": [ [re, im], ... ] }   (n^2 pairs, row-major)
// Integer-valued entries round-trip exactly.

namespace numrad {

std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);

void save_matrix(const ComplexMatrix& a, const std::string& path);
ComplexMatrix load_matrix(const std::string& path);

}  // namespace numrad

#endif
