#pragma once

namespace sepmc {

/// Vertex-count ceiling for the exhaustive (2^n subset scan) enumerators.
/// Defaults to 20; override with the SEPMC_ORACLE_LIMIT environment variable.
int oracle_limit();

}  // namespace sepmc
