#include "west/service.hh"

#include <httplib.h>

#include <exception>
#include <iostream>

int main() {
  try {
    const west::ServiceConfig config = west::ServiceConfig::from_env();
    httplib::Server server;
    west::install_routes(server, config);
    std::cout << "listening on " << config.host << ':' << config.port
              << std::endl;
    if (!server.listen(config.host, config.port)) {
      std::cerr << "cannot bind " << config.host << ':' << config.port
                << '\n';
      return 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
