#include <iostream>

#include "app/commands.hpp"

int main(int argc, char** argv) {
  return commtrace::app::main_entry(argc, argv, std::cout, std::cerr);
}
