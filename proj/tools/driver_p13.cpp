#include "driver_impl.hpp"

namespace tautilt {
template CliResult run_request<13>(const CliRequest&);
}  // namespace tautilt
