// morsewidth: command-line front end.
//
//   morsewidth width FILE
//   morsewidth stack FILE... [--out FILE]
//   morsewidth verify {theorem41|lemma5|bridge-formula|stack-width} [--csv FILE] [bounds]
//   morsewidth search --maxima N
//
// Exit codes: 0 success, 1 violated property, 2 usage or parse error.

#include <iostream>

#include "morsewidth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return morsewidth::run_cli(args, std::cout, std::cerr);
}
