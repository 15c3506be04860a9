#include <stdio.h>
#include <string.h>

#include "fraccount.h"

static const char *TABLE_ONE =
    "{\"id\":\"t1\",\"entities\":["
    "{\"institution\":\"A\",\"country\":\"X\",\"authors\":3},"
    "{\"institution\":\"B\",\"country\":\"Y\",\"authors\":2},"
    "{\"institution\":\"C\",\"country\":\"X\",\"authors\":4}]}";

int main(void) {
    FcCorpus *corpus = NULL;
    FcNetwork *net = NULL;
    size_t n = 0;

    if (fc_corpus_from_jsonl(TABLE_ONE, &corpus) != FC_STATUS_OK) {
        fprintf(stderr, "%s\n", fc_last_error_message());
        return 1;
    }
    if (fc_network_project(corpus, FC_LEVEL_INSTITUTION, "INTEGER_LINKS", &net) != FC_STATUS_OK) {
        fprintf(stderr, "%s\n", fc_last_error_message());
        return 1;
    }
    fc_network_size(net, &n);
    printf("%zu entities\n", n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            char *a = NULL;
            char *b = NULL;
            double w = 0.0;
            fc_network_entity(net, i, &a);
            fc_network_entity(net, j, &b);
            fc_network_get(net, i, j, &w);
            printf("%s-%s %g\n", a, b, w);
            fc_string_free(a);
            fc_string_free(b);
        }
    }

    FcNetwork *bad = NULL;
    printf("error %d\n", (int)fc_network_project(corpus, FC_LEVEL_COUNTRY, "NOPE", &bad));

    fc_network_free(net);
    fc_corpus_free(corpus);
    return 0;
}
