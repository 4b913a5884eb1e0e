/*!
  \file cli.hpp
  \brief Command-line front end (analyze, sweep, compare, work)

  Exit status: 0 on success, 2 on usage or domain errors, 3 when a closed
  form disagrees with the brute-force oracle.
*/

#pragma once

#include <ostream>
#include <span>
#include <string>

#include <gatemask/metrics.hpp>

namespace gatemask::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_disagreement = 3;

/*! \brief Runs one command.

  `args` excludes the program name.  `formulas` supplies the closed forms;
  tests pass a corrupted one to exercise the disagreement path.
*/
int run( std::span<const std::string> args, std::ostream& out, std::ostream& err,
         const closed_form_fn& formulas = closed_form );

} // namespace gatemask::cli
