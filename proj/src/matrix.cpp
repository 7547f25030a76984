#include "hscls/matrix.h"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace hscls {

void Matrix::save(std::ostream& out) const {
  const std::int64_t dims[2] = {rows_, cols_};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  out.write(reinterpret_cast<const char*>(data_.data()),
            static_cast<std::streamsize>(data_.size() * sizeof(real)));
}

Matrix Matrix::load(std::istream& in) {
  std::int64_t dims[2] = {0, 0};
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!in || dims[0] < 0 || dims[1] < 0) {
    throw std::runtime_error("model file: truncated matrix header");
  }
  Matrix m(dims[0], dims[1]);
  in.read(reinterpret_cast<char*>(m.data_.data()),
          static_cast<std::streamsize>(m.data_.size() * sizeof(real)));
  if (!in) {
    throw std::runtime_error("model file: truncated matrix payload");
  }
  return m;
}

}  // namespace hscls
