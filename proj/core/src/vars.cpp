#include <uqp/vars.hpp>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace uqp::vars {

namespace {

struct Table {
	std::mutex mu;
	std::vector<std::string> names;
	std::unordered_map<std::string, int> ids;

	Table() {
		const char* reserved[] = {"z", "z1", "z2", "z3", "z4", "w",
		                          "v", "u", "u1", "u2", "u3"};
		for (const char* n : reserved) {
			ids.emplace(n, int(names.size()));
			names.emplace_back(n);
		}
	}
};

Table& table() {
	static Table t;
	return t;
}

} // namespace

int id_of(const std::string& name) {
	Table& t = table();
	std::lock_guard<std::mutex> lock(t.mu);
	auto it = t.ids.find(name);
	if (it != t.ids.end()) return it->second;
	int id = int(t.names.size());
	t.ids.emplace(name, id);
	t.names.push_back(name);
	return id;
}

std::string name_of(int id) {
	Table& t = table();
	std::lock_guard<std::mutex> lock(t.mu);
	if (id < 0 || id >= int(t.names.size()))
		throw std::out_of_range("vars::name_of: unknown variable id");
	return t.names[id];
}

int count() {
	Table& t = table();
	std::lock_guard<std::mutex> lock(t.mu);
	return int(t.names.size());
}

const std::vector<int>& current_labels() {
	static const std::vector<int> labels = {Z, Z1, Z2, Z3, Z4, W};
	return labels;
}

} // namespace uqp::vars
