#include "crf/format.hpp"

namespace crf {

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace crf
