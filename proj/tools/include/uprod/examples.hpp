#ifndef UPROD_EXAMPLES_HPP
#define UPROD_EXAMPLES_HPP

#include <string>
#include <vector>

#include "uprod/io.hpp"

namespace uprod::io {

/// Names accepted by example(), in listing order.
std::vector<std::string> example_names();
/// A built-in corpus object over Q. Throws FormatError on an unknown name.
Document example(const std::string& name);

}  // namespace uprod::io

#endif  // UPROD_EXAMPLES_HPP
