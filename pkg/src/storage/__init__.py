from .chartab_cache import CacheEntry, CharacterTableCache, cache_load, cache_store, default_cache_dir
