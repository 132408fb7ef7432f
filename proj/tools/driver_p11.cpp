#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<11>(const CliRequest&);
}  // namespace tautilt
