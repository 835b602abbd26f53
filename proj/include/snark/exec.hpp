#pragma once

namespace snark {

/// Selects the serial reference or the OpenMP kernel of a parallel sweep.
/// Both return identical results.
enum class Exec { serial, parallel };

}  // namespace snark
