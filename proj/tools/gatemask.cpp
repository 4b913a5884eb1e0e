#include <iostream>
#include <string>
#include <vector>

#include <gatemask/cli.hpp>

int main( int argc, char** argv )
{
  const std::vector<std::string> args( argv + 1, argv + argc );
  return gatemask::cli::run( args, std::cout, std::cerr );
}
