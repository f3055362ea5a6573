#ifndef FROBTFT_ERROR_HPP
#define FROBTFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobtft {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace frobtft

#endif
