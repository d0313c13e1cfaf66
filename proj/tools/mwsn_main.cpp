#include "mwsn/cli.hpp"

int main(int argc, char** argv) { return mwsn::cli::dispatch(argc, argv); }
