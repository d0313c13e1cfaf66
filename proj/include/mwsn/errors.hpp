#pragma once

#include <stdexcept>
#include <string>

namespace mwsn {

/// Invalid scenario description: bad config file, bad flag value, or a
/// parameter combination the simulator rejects up front.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mwsn
